#include "deltacrit/dispersion2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "deltacrit/specfun.hpp"

namespace deltacrit {

namespace sf = specfun;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRootTol = 1e-12;

void require_positive(double k, double a) {
  if (!(k > 0.0)) throw std::domain_error("shell: k must be > 0");
  if (!(a > 0.0)) throw std::domain_error("shell: a must be > 0");
}

// Region-I pieces for the modified basis, with the common factor e^{k(r-1)}
// removed:  value(r) = K0(k) I0(kr) - I0(k) K0(kr),
//           slope(r) = k [K0(k) I1(kr) + I0(k) K1(kr)].
struct ModifiedInner {
  double value;
  double slope;
};

ModifiedInner modified_inner_scaled(double k, double r) {
  const double x = k * r;
  const double damp = std::exp(-2.0 * k * (r - 1.0));
  const double k0 = sf::bessel_k0e(k);
  const double i0 = sf::bessel_i0e(k);
  return {k0 * sf::bessel_i0e(x) - i0 * sf::bessel_k0e(x) * damp,
          k * (k0 * sf::bessel_i1e(x) + i0 * sf::bessel_k1e(x) * damp)};
}

}  // namespace

std::string to_string(ShellMode mode) {
  switch (mode) {
    case ShellMode::Paper: return "paper";
    case ShellMode::PaperEq13: return "paper-eq13";
    case ShellMode::Modified: return "modified";
  }
  return "unknown";
}

ShellMode parse_shell_mode(const std::string& name) {
  if (name == "paper") return ShellMode::Paper;
  if (name == "paper-eq13") return ShellMode::PaperEq13;
  if (name == "modified") return ShellMode::Modified;
  throw std::invalid_argument("unknown shell mode '" + name + "'");
}

InteriorBasis interior_basis(ShellMode mode) {
  return mode == ShellMode::Modified ? InteriorBasis::ModifiedInterior : InteriorBasis::PaperLiteral;
}

void Problem2D::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("Problem2D: a must be finite and > 0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("Problem2D: beta must be finite and >= 0");
  }
}

GValue g_eval(double k, double a, InteriorBasis basis) {
  require_positive(k, a);
  const double b = 1.0 + a;
  GValue g;
  double scale = 0.0;
  if (basis == InteriorBasis::PaperLiteral) {
    const double j0k = sf::bessel_j0(k), y0k = sf::bessel_y0(k);
    const double kb = k * b;
    const double j0b = sf::bessel_j0(kb), y0b = sf::bessel_y0(kb);
    const double j1b = sf::bessel_j1(kb), y1b = sf::bessel_y1(kb);
    g.numerator = -y0k * j1b + j0k * y1b;
    g.denominator = y0k * j0b - j0k * y0b;
    scale = std::fabs(y0k * j0b) + std::fabs(j0k * y0b);
    g.pole = std::fabs(g.denominator) <= 64.0 * kEps * scale;
    g.value = g.pole ? kNaN : g.numerator / g.denominator;
  } else {
    const ModifiedInner in = modified_inner_scaled(k, b);
    g.numerator = -in.slope / k;
    g.denominator = in.value;
    const double k0 = sf::bessel_k0e(k), i0 = sf::bessel_i0e(k);
    scale = std::fabs(k0 * sf::bessel_i0e(k * b)) + std::fabs(i0 * sf::bessel_k0e(k * b));
    g.pole = std::fabs(g.denominator) <= 64.0 * kEps * scale;
    g.value = g.pole ? kNaN : g.numerator / g.denominator;
  }
  return g;
}

std::vector<GSample> g_curve(double a, double k_min, double k_max, int points, InteriorBasis basis) {
  if (!(k_min > 0.0) || !(k_max >= k_min)) throw std::invalid_argument("g_curve: need 0 < k_min <= k_max");
  if (points < 1) throw std::invalid_argument("g_curve: points must be >= 1");
  if (points == 1 && k_max != k_min) throw std::invalid_argument("g_curve: one point needs k_min == k_max");
  std::vector<GSample> out;
  out.reserve(static_cast<std::size_t>(points));
  double previous_den = 0.0;
  for (int i = 0; i < points; ++i) {
    const double k = points == 1 ? k_min : k_min + (k_max - k_min) * i / (points - 1);
    const GValue g = g_eval(k, a, basis);
    const bool crossed = i > 0 && ((previous_den < 0.0) != (g.denominator < 0.0));
    out.push_back({k, g.value, g.pole || crossed});
    previous_den = g.denominator;
  }
  return out;
}

double near_minus_one_fraction(const std::vector<GSample>& curve, double band) {
  std::size_t regular = 0, near = 0;
  for (const GSample& s : curve) {
    if (s.pole_flag || !std::isfinite(s.g)) continue;
    ++regular;
    if (std::fabs(s.g + 1.0) < band) ++near;
  }
  return regular == 0 ? 0.0 : static_cast<double>(near) / static_cast<double>(regular);
}

numerics::Sample beta_of_k(double k, double a, ShellMode mode) {
  require_positive(k, a);
  const double ratio = sf::k_ratio(k * (1.0 + a));
  switch (mode) {
    case ShellMode::PaperEq13:
      return {k * (ratio - 1.0), false};
    case ShellMode::Paper: {
      const GValue g = g_eval(k, a, InteriorBasis::PaperLiteral);
      if (g.pole) return {kNaN, true};
      return {k * (g.value + ratio), false};
    }
    case ShellMode::Modified: {
      const GValue g = g_eval(k, a, InteriorBasis::ModifiedInterior);
      if (g.pole) return {kNaN, true};
      return {k * (ratio - g.value), false};
    }
  }
  throw std::invalid_argument("beta_of_k: unknown mode");
}

BetaWindow beta_window(double k, double a) {
  require_positive(k, a);
  const double kb = k * (1.0 + a);
  return {k / (2.0 * (kb + 0.25)), k / (2.0 * kb)};
}

double scan_upper_limit(const Problem2D& problem) {
  return std::max(10.0 * problem.beta * problem.shell_radius(), 10.0);
}

std::vector<BoundState> solve_bound_states_2d(const Problem2D& problem) {
  problem.validate();
  const numerics::SampledFunction f = [&problem](double k) {
    numerics::Sample s = beta_of_k(k, problem.a, problem.mode);
    if (!s.pole) s.value -= problem.beta;
    return s;
  };
  const auto roots = numerics::find_roots(f, kShellScanFloor, scan_upper_limit(problem), 256, kRootTol);

  std::vector<BoundState> states;
  states.reserve(roots.size());
  for (const auto& r : roots) {
    BoundState s = make_bound_state(r.root, r.residual, 0.0, r.converged);
    s.jump_residual = radial_jump_residual(eigenfunction_2d(s, problem), problem.beta);
    states.push_back(s);
  }
  return states;
}

PiecewiseEigenfunction eigenfunction_2d(const BoundState& state, const Problem2D& problem) {
  const double k = state.k;
  const double a = problem.a;
  require_positive(k, a);
  const double b = problem.shell_radius();

  Region inner;
  if (interior_basis(problem.mode) == InteriorBasis::PaperLiteral) {
    const double j0k = sf::bessel_j0(k), y0k = sf::bessel_y0(k);
    const GValue g = g_eval(k, a, InteriorBasis::PaperLiteral);
    if (g.pole) throw std::domain_error("eigenfunction_2d: J0/Y0 interior normalisation vanishes");
    const double den = g.denominator;
    inner.formula = "(Y0(k)J0(kr) - J0(k)Y0(kr))/(Y0(k)J0(kb) - J0(k)Y0(kb))";
    inner.value = [=](double r) {
      if (r == 1.0) return 0.0;
      return (y0k * sf::bessel_j0(k * r) - j0k * sf::bessel_y0(k * r)) / den;
    };
    inner.slope = [=](double r) {
      return k * (-y0k * sf::bessel_j1(k * r) + j0k * sf::bessel_y1(k * r)) / den;
    };
  } else {
    const ModifiedInner at_b = modified_inner_scaled(k, b);
    const GValue g = g_eval(k, a, InteriorBasis::ModifiedInterior);
    if (g.pole) throw std::domain_error("eigenfunction_2d: I0/K0 interior normalisation vanishes");
    inner.formula = "(K0(k)I0(kr) - I0(k)K0(kr))/(K0(k)I0(kb) - I0(k)K0(kb))";
    inner.value = [=](double r) {
      if (r == 1.0) return 0.0;
      if (r == b) return 1.0;
      return std::exp(k * (r - b)) * modified_inner_scaled(k, r).value / at_b.value;
    };
    inner.slope = [=](double r) {
      return std::exp(k * (r - b)) * modified_inner_scaled(k, r).slope / at_b.value;
    };
  }

  const double k0b = sf::bessel_k0e(k * b);
  Region outer{"K0(kr)/K0(kb)",
               [=](double r) { return std::exp(-k * (r - b)) * sf::bessel_k0e(k * r) / k0b; },
               [=](double r) { return -k * std::exp(-k * (r - b)) * sf::bessel_k1e(k * r) / k0b; }};
  return PiecewiseEigenfunction(1.0, b, std::move(inner), std::move(outer));
}

double radial_jump_residual(const PiecewiseEigenfunction& eigfn, double beta) {
  const double b = eigfn.breakpoint();
  const double left = eigfn.derivative(b, Side::Left);
  const double right = eigfn.derivative(b, Side::Right);
  return std::fabs(-(right - left) - beta * eigfn.evaluate(b));
}

}  // namespace deltacrit
