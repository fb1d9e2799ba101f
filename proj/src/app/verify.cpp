#include "deltacrit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "deltacrit/critical.hpp"
#include "deltacrit/dispersion1d.hpp"
#include "deltacrit/dispersion2d.hpp"
#include "deltacrit/fdoracle.hpp"
#include "deltacrit/specfun.hpp"

namespace deltacrit::verify {

namespace {

using json = nlohmann::ordered_json;
namespace sf = specfun;

// mt19937_64 is fully specified; the conversion below avoids the
// implementation-defined std::uniform_real_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, uniform()); }

 private:
  std::mt19937_64 gen_;
};

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

CheckResult make(const std::string& id, const std::string& title) {
  CheckResult r;
  r.id = id;
  r.title = title;
  return r;
}

const char* bc_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Dirichlet: return "dirichlet";
    case BoundaryKind::Neumann: return "neumann";
    case BoundaryKind::Robin: return "robin";
  }
  return "?";
}

std::string fmt(double v, int digits = 3) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

CheckResult check_dirichlet_threshold(const Options& options) {
  CheckResult r = make("1d.dirichlet_threshold", "Dirichlet critical coupling equals 1/a");
  const double tol = 1e-8 * options.tol_scale;
  double worst = 0.0;
  json rows = json::array();
  for (double a : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const CriticalResult c = beta_cr_search(Problem1D{a, 0.0, {BoundaryKind::Dirichlet}}, 1e-10);
    const double err = std::fabs(c.beta_cr - 1.0 / a);
    worst = std::max(worst, err);
    rows.push_back({{"a", a}, {"beta_cr", c.beta_cr}, {"abs_error", err}, {"bracket_only", c.bracket_only}});
  }
  r.passed = worst <= tol;
  r.details["rows"] = rows;
  r.details["worst_abs_error"] = worst;
  r.summary = "max |beta_cr - 1/a| = " + fmt(worst) + " (tol " + fmt(tol) + ")";
  return r;
}

CheckResult check_blowup_limit(const Options& options) {
  CheckResult r = make("1d.blowup_limit", "a * beta_cr = 1 as a = 2^-j -> 0");
  const double tol = 1e-8 * options.tol_scale;
  double worst = 0.0;
  double last = 0.0;
  json rows = json::array();
  for (int j = 1; j <= 20; ++j) {
    const double a = std::ldexp(1.0, -j);
    const CriticalResult c = beta_cr_search(Problem1D{a, 0.0, {BoundaryKind::Dirichlet}}, 1e-10 / a);
    const double check = a * c.beta_cr;
    worst = std::max(worst, std::fabs(check - 1.0));
    last = c.beta_cr;
    rows.push_back({{"j", j}, {"a", a}, {"beta_cr", c.beta_cr}, {"a_beta_cr", check}});
  }
  r.passed = worst <= tol && last > 1e6;
  r.details["rows"] = rows;
  r.details["worst_deviation"] = worst;
  r.summary = "max |a beta_cr - 1| = " + fmt(worst) + ", beta_cr(2^-20) = " + fmt(last);
  return r;
}

CheckResult check_neumann_zero_threshold(const Options& options) {
  CheckResult r = make("1d.neumann_zero", "Neumann bound state for every beta > 0");
  const double beta = 1e-6;
  const double slack = 1e-12 * options.tol_scale;
  const auto states = solve_bound_states(Problem1D{1.0, beta, {BoundaryKind::Neumann}});
  const bool exists = !states.empty();
  const double k = exists ? states.back().k : std::nan("");
  const bool bounded = exists && k >= beta / 2.0 - slack && k <= beta + slack;
  const CriticalResult c = beta_cr_search(Problem1D{1.0, 0.0, {BoundaryKind::Neumann}}, 1e-10);
  r.passed = bounded && c.beta_cr <= 1e-10;
  r.details["beta"] = beta;
  r.details["k"] = number(k);
  r.details["beta_cr"] = c.beta_cr;
  r.details["probe"] = c.hi;
  r.summary = "k = " + fmt(k) + " at beta = 1e-6, beta_cr = " + fmt(c.beta_cr);
  return r;
}

CheckResult check_robin_zero_threshold(const Options& options) {
  CheckResult r = make("1d.robin_zero", "Robin (sigma = 1) state e^{-x} at beta = 0");
  const Problem1D p{1.0, 0.0, {BoundaryKind::Robin, 1.0}};
  const double residual = std::fabs(dispersion_residual(1.0, p).value);
  const auto fd = fd_halfline_richardson(p, FdConfig{1e-3, 40.0}, 1);
  const double lambda = fd.front().value;
  r.passed = residual <= 1e-12 * options.tol_scale && std::fabs(lambda + 1.0) <= 1e-5 * options.tol_scale;
  r.details["dispersion_residual_at_k1"] = residual;
  r.details["fd_lambda_h"] = fd.front().coarse;
  r.details["fd_lambda_h2"] = fd.front().fine;
  r.details["fd_lambda_extrapolated"] = lambda;
  r.summary = "residual " + fmt(residual) + ", FD lambda = " + fmt(lambda, 12);
  return r;
}

CheckResult check_eigenvalue_bounds(const Options& options) {
  CheckResult r = make("1d.eigenvalue_bounds", "Dirichlet k <= beta/2 <= k for Neumann and Robin");
  const double slack = 1e-12 * options.tol_scale;
  bool all_ok = true;
  json per_bc = json::array();
  int seed = 0;
  for (BoundaryKind kind : {BoundaryKind::Dirichlet, BoundaryKind::Neumann, BoundaryKind::Robin}) {
    Rng rng(0x5eed0001 + static_cast<std::uint64_t>(seed++));
    int pairs = 0, states = 0, violations = 0, ground_violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    json first_violation = nullptr;
    while (pairs < 100) {
      const double a = rng.log_uniform(0.1, 10.0);
      const double beta = rng.log_uniform(0.1, 10.0);
      const Problem1D p{a, beta, {kind, 1.0}};
      const auto found = solve_bound_states(p);
      if (found.empty()) continue;
      ++pairs;
      for (std::size_t i = 0; i < found.size(); ++i) {
        const BoundState& s = found[i];
        ++states;
        // Signed excess: positive means the bound is broken.
        const double quarter = beta * beta / 4.0;
        const double excess = kind == BoundaryKind::Dirichlet ? -(s.lambda + quarter) : s.lambda + quarter;
        worst = std::max(worst, excess);
        if (excess > slack) {
          ++violations;
          if (i + 1 == found.size()) ++ground_violations;  // ground state has the largest k
          if (first_violation.is_null()) {
            first_violation = {{"a", a}, {"beta", beta}, {"k", s.k}, {"lambda", s.lambda}, {"minus_beta2_over_4", -quarter}};
          }
        }
      }
    }
    all_ok = all_ok && violations == 0;
    per_bc.push_back({{"bc", bc_name(kind)},
                      {"pairs", pairs},
                      {"states", states},
                      {"violations", violations},
                      {"ground_state_violations", ground_violations},
                      {"worst_excess", worst},
                      {"first_violation", first_violation}});
  }
  r.passed = all_ok;
  r.details["by_boundary"] = per_bc;
  std::string s;
  for (const auto& row : per_bc) {
    if (!s.empty()) s += "; ";
    s += row["bc"].get<std::string>() + " " + std::to_string(row["violations"].get<int>()) + "/" +
         std::to_string(row["states"].get<int>()) + " violations (ground " +
         std::to_string(row["ground_state_violations"].get<int>()) + ")";
  }
  r.summary = s;
  return r;
}

CheckResult check_reduced_form(const Options& options) {
  CheckResult r = make("1d.reduced_form", "reduced and unreduced roots map under z = 2ka, B = beta a");
  const double tol = 1e-10 * options.tol_scale;
  double worst_z = 0.0, worst_residual = 0.0;
  int compared = 0, missing = 0;
  int seed = 0;
  for (BoundaryKind kind : {BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
    Rng rng(0x5eed0100 + static_cast<std::uint64_t>(seed++));
    int pairs = 0;
    while (pairs < 50) {
      const double a = rng.log_uniform(0.1, 10.0);
      const double beta = rng.log_uniform(0.1, 10.0);
      const Problem1D p{a, beta, {kind}};
      const auto states = solve_bound_states(p);
      if (states.empty()) continue;
      ++pairs;
      const double k = states.front().k;
      const ReducedForm mapped = ReducedForm::from(k, p);
      worst_residual = std::max(worst_residual, std::fabs(reduced_residual(mapped, kind)));

      const double B = mapped.B;
      const double lo = kind == BoundaryKind::Dirichlet ? 1e-9 : 0.5 * B;
      const double hi = kind == BoundaryKind::Dirichlet ? B : 2.0 * B + 1.0;
      const auto roots = numerics::find_roots(
          [B, kind](double z) { return reduced_residual(ReducedForm{z, B}, kind); }, lo, hi, 4, 1e-14);
      if (roots.size() != 1) {
        ++missing;
        continue;
      }
      ++compared;
      worst_z = std::max(worst_z, std::fabs(roots.front().root - mapped.z));
    }
  }
  r.passed = missing == 0 && worst_z <= tol && worst_residual <= tol;
  r.details["compared"] = compared;
  r.details["unmatched"] = missing;
  r.details["worst_z_difference"] = worst_z;
  r.details["worst_reduced_residual"] = worst_residual;
  r.summary = std::to_string(compared) + " pairs, max |z_reduced - 2ka| = " + fmt(worst_z);
  return r;
}

CheckResult check_fd_agreement_1d(const Options& options) {
  CheckResult r = make("oracle.fd_agreement_1d", "finite differences reproduce 1D eigenvalues");
  const double tol = 1e-3 * options.tol_scale;
  Rng rng(0x5eed0200);
  const std::array kinds{BoundaryKind::Dirichlet, BoundaryKind::Neumann, BoundaryKind::Robin};
  json rows = json::array();
  double worst = 0.0;
  int problems = 0;
  bool counts_ok = true;
  while (problems < 10) {
    const BoundaryKind kind = kinds[static_cast<std::size_t>(problems % 3)];
    const double a = rng.log_uniform(0.2, 5.0);
    const double beta = rng.log_uniform(0.5, 5.0);
    const Problem1D p{a, beta, {kind, 1.0}};
    const auto states = solve_bound_states(p);
    if (states.empty()) continue;
    ++problems;
    const double k_min = states.front().k;
    FdConfig config{2e-3, std::min(400.0, a + 30.0 / k_min)};
    config = align_to_node(config, 0.0, a);
    const auto fd = fd_halfline_richardson(p, config, static_cast<int>(states.size()) + 1);
    int fd_negative = 0;
    for (const auto& e : fd) fd_negative += e.value < 0.0 ? 1 : 0;
    counts_ok = counts_ok && fd_negative == static_cast<int>(states.size());
    // States ascend in k, eigenvalues ascend in lambda: pair them in reverse.
    for (std::size_t i = 0; i < states.size(); ++i) {
      const double exact = states[states.size() - 1 - i].lambda;
      const double rel = std::fabs(fd[i].value - exact) / std::fabs(exact);
      worst = std::max(worst, rel);
      rows.push_back({{"bc", bc_name(kind)}, {"a", a}, {"beta", beta}, {"lambda", exact},
                      {"fd_lambda", fd[i].value}, {"rel_diff", rel}});
    }
  }
  r.passed = counts_ok && worst <= tol;
  r.details["rows"] = rows;
  r.details["state_counts_agree"] = counts_ok;
  r.details["worst_rel_diff"] = worst;
  r.summary = std::to_string(rows.size()) + " states in 10 problems, max rel diff " + fmt(worst);
  return r;
}

CheckResult check_narrow_well(const Options& options) {
  CheckResult r = make("oracle.narrow_well", "narrow deep well approaches the delta eigenvalue");
  const Problem1D p{1.0, 3.0, {BoundaryKind::Dirichlet}};
  const double exact = solve_bound_states(p).front().lambda;
  const std::array widths{0.2, 0.1, 0.05, 0.025};
  const auto points = narrow_well_convergence(p, widths);
  json rows = json::array();
  bool decreasing = true;
  double previous = std::numeric_limits<double>::infinity();
  double final_rel = 0.0;
  for (const WellPoint& w : points) {
    const double err = std::fabs(w.lambda - exact);
    decreasing = decreasing && err < previous;
    previous = err;
    final_rel = err / std::fabs(exact);
    rows.push_back({{"width", w.width}, {"lambda", w.lambda}, {"abs_error", err}});
  }
  r.passed = decreasing && final_rel < 1e-2 * options.tol_scale;
  r.details["delta_lambda"] = exact;
  r.details["rows"] = rows;
  r.details["errors_decreasing"] = decreasing;
  r.details["final_rel_error"] = final_rel;
  r.summary = std::string(decreasing ? "errors decrease" : "errors do not decrease") +
              ", final rel error " + fmt(final_rel) + " (tol 1e-2)";
  return r;
}

CheckResult check_special_functions(const Options& options) {
  CheckResult r = make("specfun.wronskian_ratio_bounds", "Bessel Wronskians and K1/K0 ratio bounds");
  const double tol = 1e-10 * options.tol_scale;
  double worst_jy = 0.0, worst_ik = 0.0;
  constexpr int kPoints = 1000;
  for (int i = 0; i < kPoints; ++i) {
    const double x = 0.05 * std::pow(100.0 / 0.05, static_cast<double>(i) / (kPoints - 1));
    const double jy = sf::bessel_j1(x) * sf::bessel_y0(x) - sf::bessel_j0(x) * sf::bessel_y1(x);
    worst_jy = std::max(worst_jy, std::fabs(jy * std::numbers::pi * x / 2.0 - 1.0));
    const double ik = sf::bessel_i0(x) * sf::bessel_k1(x) + sf::bessel_i1(x) * sf::bessel_k0(x);
    worst_ik = std::max(worst_ik, std::fabs(ik * x - 1.0));
  }
  int bound_failures = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kPoints; ++i) {
    const double x = 1e-3 * std::pow(50.0 / 1e-3, static_cast<double>(i) / (kPoints - 1));
    const double ratio = sf::k_ratio(x);
    const sf::RatioBounds bounds = sf::k_ratio_bounds(x);
    if (!(bounds.lower < ratio && ratio < bounds.upper)) ++bound_failures;
    min_gap = std::min({min_gap, (ratio - bounds.lower) / ratio, (bounds.upper - ratio) / ratio});
  }
  r.passed = worst_jy <= tol && worst_ik <= tol && bound_failures == 0;
  r.details["wronskian_jy_max_rel"] = worst_jy;
  r.details["wronskian_ik_max_rel"] = worst_ik;
  r.details["ratio_bound_failures"] = bound_failures;
  r.details["ratio_bound_min_rel_gap"] = min_gap;
  r.summary = "Wronskian residuals " + fmt(worst_jy) + " (J/Y), " + fmt(worst_ik) + " (I/K); " +
              std::to_string(bound_failures) + " ratio-bound failures";
  return r;
}

CheckResult check_reference_values(const Options& options) {
  CheckResult r = make("specfun.reference_values", "Bessel values against high-precision references");
  struct Ref {
    const char* kind;
    double x;
    double value;
  };
  // Computed with 200+ bit MPFR ascending series.
  static constexpr Ref kRefs[] = {
      {"J0", 1.0, 0.76519768655796661},       {"J1", 1.0, 0.4400505857449335},
      {"Y0", 1.0, 0.088256964215676956},      {"Y1", 1.0, -0.78121282130028868},
      {"I0", 1.0, 1.2660658777520084},        {"I1", 1.0, 0.56515910399248503},
      {"K0", 1.0, 0.42102443824070834},       {"K1", 1.0, 0.60190723019723458},
      {"K0", 2.0, 0.11389387274953344},       {"K1", 2.0, 0.13986588181652243},
      {"J0", 600.0, -0.021987789172131952},   {"Y0", 600.0, 0.024032680101381799},
      {"K0", 600.0, 1.3558285309948523e-262}, {"I0", 600.0, 6.1463054039368444e+258},
      {"K1", 1e-8, 99999999.999999896},       {"Y1", 1e-8, -63661977.236758195},
  };
  const double tol = 1e-13 * options.tol_scale;
  double worst = 0.0;
  json rows = json::array();
  for (const Ref& ref : kRefs) {
    const double v = sf::bessel_eval(sf::parse_kind(ref.kind), ref.x);
    const double rel = std::fabs(v - ref.value) / std::fabs(ref.value);
    worst = std::max(worst, rel);
    rows.push_back({{"kind", ref.kind}, {"x", ref.x}, {"value", v}, {"reference", ref.value}, {"rel_error", rel}});
  }
  r.passed = worst <= tol;
  r.details["rows"] = rows;
  r.summary = "max relative error " + fmt(worst);
  return r;
}

CheckResult check_shell_window(const Options&) {
  CheckResult r = make("2d.shell_window", "g = -1 coupling inside the ratio-bound window, window below 1/2");
  int outside = 0, high = 0, samples = 0;
  double max_hi = 0.0;
  json first_outside = nullptr;
  for (double a : {0.5, 1.0, 2.0, 4.0, 10.0}) {
    for (int i = 0; i < 200; ++i) {
      const double k = 0.01 * std::pow(1e4, static_cast<double>(i) / 199.0);
      const double beta = beta_of_k(k, a, ShellMode::PaperEq13).value;
      const BetaWindow w = beta_window(k, a);
      ++samples;
      if (!(w.lo < beta && beta < w.hi)) {
        ++outside;
        if (first_outside.is_null()) first_outside = {{"a", a}, {"k", k}, {"beta", beta}, {"lo", w.lo}, {"hi", w.hi}};
      }
      if (!(w.hi < 0.5)) ++high;
      max_hi = std::max(max_hi, w.hi);
    }
  }
  r.passed = outside == 0 && high == 0;
  r.details["samples"] = samples;
  r.details["outside_window"] = outside;
  r.details["first_outside"] = first_outside;
  r.details["max_window_hi"] = max_hi;
  r.summary = std::to_string(outside) + "/" + std::to_string(samples) + " outside the window, max hi " + fmt(max_hi);
  return r;
}

CheckResult check_g_curves(const Options&) {
  CheckResult r = make("2d.g_curves", "g(k, a) curves emitted with poles flagged; near -1 fraction measured");
  json rows = json::array();
  bool ok = true;
  for (double a : {0.5, 2.0, 4.0, 10.0}) {
    const auto curve = g_curve(a, 0.5, 10.0, 500, InteriorBasis::PaperLiteral);
    int poles = 0;
    bool finite = true;
    for (const GSample& s : curve) {
      if (s.pole_flag) ++poles;
      else finite = finite && std::isfinite(s.g);
    }
    const double fraction = near_minus_one_fraction(curve);
    ok = ok && curve.size() == 500 && finite;
    rows.push_back({{"a", a}, {"points", curve.size()}, {"pole_flags", poles}, {"near_minus_one_fraction", fraction}});
  }
  r.passed = ok;
  r.details["rows"] = rows;
  std::string s = "near -1 fraction:";
  for (const auto& row : rows) s += " a=" + fmt(row["a"].get<double>()) + " " + fmt(row["near_minus_one_fraction"].get<double>());
  r.summary = s;
  return r;
}

CheckResult check_modified_threshold(const Options& options) {
  CheckResult r = make("2d.modified_threshold", "I0/K0 shell threshold equals 1/((1+a) ln(1+a))");
  const double tol = 1e-9 * options.tol_scale;
  double worst = 0.0;
  bool monotone = true;
  json rows = json::array();
  for (double a : {0.5, 1.0, 2.0}) {
    const CriticalResult c = beta_cr_curve_infimum(a, ShellMode::Modified);
    const double limit = 1.0 / ((1.0 + a) * std::log1p(a));
    const double rel = std::fabs(c.beta_cr - limit) / limit;
    worst = std::max(worst, rel);
    monotone = monotone && !c.bracket_only;
    rows.push_back({{"a", a}, {"beta_cr", c.beta_cr}, {"small_k_limit", limit}, {"rel_diff", rel},
                    {"extrapolation_spread", number(c.residual)}});
  }
  r.passed = monotone && worst <= tol;
  r.details["rows"] = rows;
  r.summary = "max rel diff from the small-k limit " + fmt(worst);
  return r;
}

CheckResult check_arbitration_2d(const Options& options) {
  CheckResult r = make("oracle.arbitration_2d", "radial FD spectrum selects one interior basis");
  const double rel_tol = 1e-2 * options.tol_scale;
  json per_a = json::array();
  std::string named_at_1;
  bool ok = true;
  for (double a : {0.5, 1.0, 2.0}) {
    // Coupling placing the g = -1 root at k = 1.
    const double beta = beta_of_k(1.0, a, ShellMode::PaperEq13).value;
    const auto cmp = compare_modes_with_fd(a, beta, FdConfig{0.01, 1.0 + a + 100.0}, rel_tol);
    json modes = json::array();
    std::vector<std::string> matching;
    for (const ModeComparison& c : cmp) {
      modes.push_back({{"mode", to_string(c.mode)}, {"analytic_states", c.analytic_states},
                       {"fd_states", c.fd_states}, {"analytic_lambda", number(c.analytic_lambda)},
                       {"fd_lambda", number(c.fd_lambda)}, {"rel_diff", number(c.rel_diff)}, {"match", c.match}});
      if (c.match && c.mode != ShellMode::PaperEq13) matching.push_back(to_string(c.mode));
    }
    const std::string named = matching.size() == 1 ? matching.front() : "";
    if (a == 1.0) named_at_1 = named;
    ok = ok && matching.size() == 1;
    per_a.push_back({{"a", a}, {"beta", beta}, {"modes", modes}, {"matching_basis", named.empty() ? json(nullptr) : json(named)}});
  }
  r.passed = ok && !named_at_1.empty();
  r.details["rows"] = per_a;
  r.details["matching_basis"] = named_at_1.empty() ? json(nullptr) : json(named_at_1);
  r.summary = "matching basis at a = 1: " + (named_at_1.empty() ? std::string("none") : named_at_1);
  return r;
}

CheckResult check_modified_fd_crosscheck(const Options& options) {
  CheckResult r = make("oracle.modified_crosscheck", "I0/K0 shell eigenvalues agree with radial FD");
  const double tol = 1e-3 * options.tol_scale;
  double worst = 0.0;
  bool ok = true;
  json rows = json::array();
  for (double a : {0.5, 1.0, 2.0}) {
    const double threshold = beta_cr_curve_infimum(a, ShellMode::Modified).beta_cr;
    // Above threshold: one state, FD must find it.
    const double beta = 2.0 * threshold;
    const auto states = solve_bound_states_2d(Problem2D{a, beta, ShellMode::Modified});
    if (states.size() != 1) {
      ok = false;
      rows.push_back({{"a", a}, {"beta", beta}, {"analytic_states", states.size()}});
      continue;
    }
    const double k = states.front().k;
    const double b = 1.0 + a;
    const FdConfig config = align_to_node(FdConfig{0.01, b + 30.0 / k}, 1.0, b);
    const auto fd = fd_radial_richardson(Problem2D{a, beta, ShellMode::Modified}, config, 2);
    const double rel = std::fabs(fd[0].value - states.front().lambda) / std::fabs(states.front().lambda);
    const bool single = fd[1].value >= 0.0;
    // Below threshold: no FD bound state.
    const double below = 0.9 * threshold;
    const auto fd_below = fd_radial_spectrum(Problem2D{a, below, ShellMode::Modified},
                                             align_to_node(FdConfig{0.01, b + 100.0}, 1.0, b), 1);
    const bool none_below = fd_below.front() >= 0.0;
    worst = std::max(worst, rel);
    ok = ok && single && none_below;
    rows.push_back({{"a", a}, {"beta_cr", threshold}, {"beta", beta}, {"lambda", states.front().lambda},
                    {"fd_lambda", fd[0].value}, {"rel_diff", rel}, {"fd_single_state", single},
                    {"fd_lowest_at_0.9_beta_cr", fd_below.front()}});
  }
  r.passed = ok && worst <= tol;
  r.details["rows"] = rows;
  r.summary = "max rel diff " + fmt(worst) + " at beta = 2 beta_cr; no FD state at 0.9 beta_cr: " +
              (ok ? "yes" : "no");
  return r;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks{
      {"specfun.wronskian_ratio_bounds", "specfun", &check_special_functions},
      {"specfun.reference_values", "specfun", &check_reference_values},
      {"1d.dirichlet_threshold", "1d", &check_dirichlet_threshold},
      {"1d.blowup_limit", "1d", &check_blowup_limit},
      {"1d.neumann_zero", "1d", &check_neumann_zero_threshold},
      {"1d.robin_zero", "1d", &check_robin_zero_threshold},
      {"1d.eigenvalue_bounds", "1d", &check_eigenvalue_bounds},
      {"1d.reduced_form", "1d", &check_reduced_form},
      {"2d.shell_window", "2d", &check_shell_window},
      {"2d.g_curves", "2d", &check_g_curves},
      {"2d.modified_threshold", "2d", &check_modified_threshold},
      {"oracle.fd_agreement_1d", "oracle", &check_fd_agreement_1d},
      {"oracle.narrow_well", "oracle", &check_narrow_well},
      {"oracle.arbitration_2d", "oracle", &check_arbitration_2d},
      {"oracle.modified_crosscheck", "oracle", &check_modified_fd_crosscheck},
  };
  return checks;
}

const Check& find_check(const std::string& id) {
  for (const Check& c : registry()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown check '" + id + "'");
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& options) {
  if (suite != "all" && suite != "specfun" && suite != "1d" && suite != "2d" && suite != "oracle") {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  if (!(options.tol_scale > 0.0)) throw std::invalid_argument("tol-scale must be > 0");
  std::vector<CheckResult> results;
  for (const Check& c : registry()) {
    if (suite != "all" && c.suite != suite) continue;
    try {
      results.push_back(c.run(options));
    } catch (const std::exception& e) {
      CheckResult failed = make(c.id, "check raised an exception");
      failed.summary = e.what();
      failed.details["exception"] = e.what();
      results.push_back(std::move(failed));
    }
  }
  return results;
}

json summary_json(const std::string& suite, const Options& options, const std::vector<CheckResult>& results) {
  json doc;
  doc["suite"] = suite;
  doc["tol_scale"] = options.tol_scale;
  int passed = 0;
  json checks = json::array();
  for (const CheckResult& r : results) {
    passed += r.passed ? 1 : 0;
    checks.push_back({{"id", r.id}, {"passed", r.passed}, {"title", r.title}, {"summary", r.summary},
                      {"details", r.details}});
  }
  doc["passed"] = passed == static_cast<int>(results.size());
  doc["counts"] = {{"total", results.size()}, {"passed", passed}, {"failed", static_cast<int>(results.size()) - passed}};
  doc["checks"] = checks;
  return doc;
}

void write_report(const std::vector<CheckResult>& results, std::ostream& out) {
  int passed = 0;
  for (const CheckResult& r : results) {
    passed += r.passed ? 1 : 0;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.title << "\n       " << r.summary << '\n';
  }
  out << passed << '/' << results.size() << " checks passed\n";
}

}  // namespace deltacrit::verify
