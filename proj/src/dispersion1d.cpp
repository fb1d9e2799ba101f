#include "deltacrit/dispersion1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace deltacrit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
// Lower end of the k scan; the threshold limit k -> 0 is reached to
// double precision well before this.
constexpr double kScanFloor = 1e-300;
constexpr double kRootTol = 1e-12;

// x coth(x), accurate down to x -> 0 where it tends to 1.
double x_coth_x(double x) {
  double value;
  if (x < 1e-150) {
    value = 1.0;  // 1 + x^2/3 rounds to 1
  } else if (x < 0.5) {
    const double em = std::expm1(2.0 * x);
    value = x * (em + 2.0) / em;
  } else {
    value = x / std::tanh(x);
  }
#ifdef DELTACRIT_MUTATE_COTH
  value *= 1.001;
#endif
  return value;
}

double robin_denominator(double k, const Problem1D& p) { return k_coth(k, p.a) - p.bc.sigma; }

bool robin_pole(double k, const Problem1D& p) {
  const double kc = k_coth(k, p.a);
  return std::fabs(kc - p.bc.sigma) <= 4.0 * kEps * std::max(std::fabs(kc), std::fabs(p.bc.sigma));
}

// (F(k) - beta)(k coth(ka) - sigma): the Robin residual with its pole cleared.
// For large a the pole sits within ~e^{-2a} of the root near k = 1, closer
// than any scan spacing, so the roots are located on this form instead.
double robin_cleared(double k, const Problem1D& p) {
  const double kc = k_coth(k, p.a);
  const double sigma = p.bc.sigma;
  return (k - p.beta) * (kc - sigma) + k * k - sigma * kc;
}

}  // namespace

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Dirichlet: return "dirichlet";
    case BoundaryKind::Neumann: return "neumann";
    case BoundaryKind::Robin: return "robin";
  }
  return "unknown";
}

BoundaryKind parse_boundary(const std::string& name) {
  if (name == "dirichlet") return BoundaryKind::Dirichlet;
  if (name == "neumann") return BoundaryKind::Neumann;
  if (name == "robin") return BoundaryKind::Robin;
  throw std::invalid_argument("unknown boundary condition '" + name + "'");
}

void Problem1D::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("Problem1D: a must be finite and > 0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("Problem1D: beta must be finite and >= 0");
  }
  if (bc.kind == BoundaryKind::Robin && !std::isfinite(bc.sigma)) {
    throw std::invalid_argument("Problem1D: Robin sigma must be finite");
  }
}

ReducedForm ReducedForm::from(double k, const Problem1D& problem) {
  return {2.0 * k * problem.a, problem.beta * problem.a};
}

double k_coth(double k, double a) { return x_coth_x(k * a) / a; }

double dispersion_lhs(double k, const Problem1D& problem) {
  if (!(k > 0.0)) throw std::domain_error("dispersion: k must be > 0");
  const double a = problem.a;
  switch (problem.bc.kind) {
    case BoundaryKind::Dirichlet:
      return k + k_coth(k, a);
    case BoundaryKind::Neumann:
      return k + k * std::tanh(k * a);
    case BoundaryKind::Robin: {
      if (robin_pole(k, problem)) return kInf;
      const double kc = k_coth(k, a);
      const double sigma = problem.bc.sigma;
      // k (k - sigma coth ka) / (k coth ka - sigma), numerator kept as k^2 - sigma k coth ka
      return k + (k * k - sigma * kc) / robin_denominator(k, problem);
    }
  }
  throw std::invalid_argument("dispersion: unknown boundary condition");
}

numerics::Sample dispersion_residual(double k, const Problem1D& problem) {
  if (problem.bc.kind == BoundaryKind::Robin && robin_pole(k, problem)) {
    return {std::numeric_limits<double>::quiet_NaN(), true};
  }
  return {dispersion_lhs(k, problem) - problem.beta, false};
}

double scan_upper_limit(const Problem1D& problem) {
  double k_max = std::max({10.0 * problem.beta, 10.0 / problem.a, 10.0});
  if (problem.bc.kind == BoundaryKind::Robin) k_max = std::max(k_max, 10.0 * std::fabs(problem.bc.sigma));
  return k_max;
}

std::vector<BoundState> solve_bound_states(const Problem1D& problem) {
  problem.validate();
  std::vector<numerics::RootResult> roots;
  if (problem.bc.kind == BoundaryKind::Robin) {
    const numerics::ScalarFunction f = [&problem](double k) { return robin_cleared(k, problem); };
    roots = numerics::find_roots(f, kScanFloor, scan_upper_limit(problem), 64, kRootTol);
  } else {
    const numerics::SampledFunction f = [&problem](double k) { return dispersion_residual(k, problem); };
    roots = numerics::find_roots(f, kScanFloor, scan_upper_limit(problem), 64, kRootTol);
  }

  std::vector<BoundState> states;
  states.reserve(roots.size());
  for (const auto& r : roots) {
    if (!(r.root > kScanFloor)) continue;
    double residual = r.residual;
    if (problem.bc.kind == BoundaryKind::Robin) {
      const numerics::Sample s = dispersion_residual(r.root, problem);
      if (s.pole) continue;
      residual = s.value;
    }
    BoundState s = make_bound_state(r.root, residual, 0.0, r.converged);
    s.jump_residual = jump_residual(eigenfunction(s, problem), problem);
    states.push_back(s);
  }
  return states;
}

double reduced_residual(ReducedForm form, BoundaryKind kind) {
  if (!(form.z > 0.0)) throw std::domain_error("reduced form: z must be > 0");
  if (!(form.B >= 0.0)) throw std::domain_error("reduced form: B must be >= 0");
  if (form.B == 0.0) throw std::domain_error("reduced form: B = 0 divides by zero");
  const double ratio = form.z / form.B;
  switch (kind) {
    case BoundaryKind::Dirichlet: return std::exp(-form.z) - (1.0 - ratio);
    case BoundaryKind::Neumann: return std::exp(-form.z) - (ratio - 1.0);
    case BoundaryKind::Robin: break;
  }
  throw std::invalid_argument("reduced form: only Dirichlet and Neumann have a reduced form");
}

PiecewiseEigenfunction eigenfunction(const BoundState& state, const Problem1D& problem) {
  const double k = state.k;
  const double a = problem.a;
  if (!(k > 0.0)) throw std::domain_error("eigenfunction: k must be > 0");

  // Inner forms are written as e^{k(x-a)} * (ratio of bounded terms) so that
  // large ka neither overflows nor cancels.
  Region inner;
  switch (problem.bc.kind) {
    case BoundaryKind::Dirichlet: {
      const double den = -std::expm1(-2.0 * k * a);  // 1 - e^{-2ka}
      inner.formula = "sinh(kx)/sinh(ka)";
      inner.value = [k, a, den](double x) { return std::exp(k * (x - a)) * -std::expm1(-2.0 * k * x) / den; };
      inner.slope = [k, a, den](double x) {
        return k * std::exp(k * (x - a)) * (1.0 + std::exp(-2.0 * k * x)) / den;
      };
      break;
    }
    case BoundaryKind::Neumann: {
      const double den = 1.0 + std::exp(-2.0 * k * a);
      inner.formula = "cosh(kx)/cosh(ka)";
      inner.value = [k, a, den](double x) { return std::exp(k * (x - a)) * (1.0 + std::exp(-2.0 * k * x)) / den; };
      inner.slope = [k, a, den](double x) {
        return k * std::exp(k * (x - a)) * -std::expm1(-2.0 * k * x) / den;
      };
      break;
    }
    case BoundaryKind::Robin: {
      const double sigma = problem.bc.sigma;
      const double ea = std::exp(-2.0 * k * a);
      const double c_part = k * (1.0 + ea);
      const double s_part = sigma * -std::expm1(-2.0 * k * a);
      const double den = c_part - s_part;
      if (std::fabs(den) <= 4.0 * kEps * std::max(std::fabs(c_part), std::fabs(s_part))) {
        throw std::domain_error("eigenfunction: Robin normalisation k cosh(ka) - sigma sinh(ka) vanishes");
      }
      inner.formula = "(k cosh(kx) - sigma sinh(kx))/(k cosh(ka) - sigma sinh(ka))";
      inner.value = [k, a, sigma, den](double x) {
        const double ex = std::exp(-2.0 * k * x);
        return std::exp(k * (x - a)) * (k * (1.0 + ex) - sigma * -std::expm1(-2.0 * k * x)) / den;
      };
      inner.slope = [k, a, sigma, den](double x) {
        const double ex = std::exp(-2.0 * k * x);
        return k * std::exp(k * (x - a)) * (k * -std::expm1(-2.0 * k * x) - sigma * (1.0 + ex)) / den;
      };
      break;
    }
  }

  Region outer{"exp(k(a-x))", [k, a](double x) { return std::exp(k * (a - x)); },
               [k, a](double x) { return -k * std::exp(k * (a - x)); }};
  return PiecewiseEigenfunction(0.0, a, std::move(inner), std::move(outer));
}

double jump_residual(const PiecewiseEigenfunction& eigfn, const Problem1D& problem) {
  const double a = eigfn.breakpoint();
  const double left = eigfn.derivative(a, Side::Left);
  const double right = eigfn.derivative(a, Side::Right);
  return std::fabs(-(right - left) - problem.beta * eigfn.evaluate(a));
}

}  // namespace deltacrit
