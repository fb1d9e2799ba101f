#include "deltacrit/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace deltacrit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool monotone(std::vector<Probe> trace) {
  std::sort(trace.begin(), trace.end(), [](const Probe& x, const Probe& y) { return x.beta < y.beta; });
  bool seen_state = false;
  for (const Probe& p : trace) {
    if (p.has_state) seen_state = true;
    else if (seen_state) return false;
  }
  return true;
}

double small_k_variable(double k, double b) {
  return 1.0 / (std::log(2.0 / (k * b)) - std::numbers::egamma);
}

}  // namespace

std::string to_string(CriticalMethod method) {
  switch (method) {
    case CriticalMethod::AnalyticDirichlet1D: return "analytic-dirichlet-1d";
    case CriticalMethod::ExistenceBisection: return "existence-bisection";
    case CriticalMethod::CurveInfimum: return "curve-infimum";
  }
  return "unknown";
}

double beta_cr_analytic_dirichlet_1d(double a) {
  if (!(a > 0.0)) throw std::domain_error("beta_cr: a must be > 0");
  return 1.0 / a;
}

CriticalResult beta_cr_bisect(const std::function<bool(double)>& has_state, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("beta_cr: tol must be > 0");
  CriticalResult r;
  r.method = CriticalMethod::ExistenceBisection;
  auto probe = [&](double beta) {
    const bool s = has_state(beta);
    r.trace.push_back({beta, s});
    return s;
  };

  if (probe(kZeroThresholdProbe)) {
    r.beta_cr = 0.0;
    r.lo = 0.0;
    r.hi = kZeroThresholdProbe;
    r.residual = r.hi - r.lo;
    return r;
  }

  double lo = kZeroThresholdProbe;
  double hi = 1.0;
  while (!probe(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kMaxBracketBeta) throw std::runtime_error("beta_cr: no bound state found up to beta = 2^40");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (probe(mid)) hi = mid;
    else lo = mid;
    ++r.iterations;
  }
  r.lo = lo;
  r.hi = hi;
  r.beta_cr = 0.5 * (lo + hi);
  r.residual = hi - lo;
  // Bisection probes alone are monotone by construction; probe outside the
  // bracket to catch a predicate that switches back.
  for (double f : {0.5, 0.25}) probe(f * lo);
  for (double f : {2.0, 4.0}) probe(f * hi);
  r.bracket_only = !monotone(r.trace);
  return r;
}

CriticalResult beta_cr_search(const Problem1D& family, double tol) {
  Problem1D p = family;
  p.beta = 0.0;
  p.validate();
  return beta_cr_bisect(
      [p](double beta) mutable {
        p.beta = beta;
        return !solve_bound_states(p).empty();
      },
      tol);
}

CriticalResult beta_cr_search(const Problem2D& family, double tol) {
  Problem2D p = family;
  p.beta = 0.0;
  p.validate();
  return beta_cr_bisect(
      [p](double beta) mutable {
        p.beta = beta;
        return !solve_bound_states_2d(p).empty();
      },
      tol);
}

CriticalResult beta_cr_curve_infimum(double a, ShellMode mode) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("beta_cr: a must be finite and > 0");
  const double b = 1.0 + a;
  CriticalResult r;
  r.method = CriticalMethod::CurveInfimum;

  // Log grid over k in [1e-8, 1e2].
  constexpr int kPoints = 401;
  double min_value = std::numeric_limits<double>::infinity();
  bool increasing = true;
  bool any_pole = false;
  double previous = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kPoints; ++i) {
    const double k = std::pow(10.0, -8.0 + 10.0 * i / (kPoints - 1));
    const numerics::Sample s = beta_of_k(k, a, mode);
    ++r.iterations;
    if (s.pole || !std::isfinite(s.value)) {
      any_pole = true;
      increasing = false;
      continue;
    }
    min_value = std::min(min_value, s.value);
    if (!(s.value > previous)) increasing = false;
    previous = s.value;
  }

  if (min_value <= 0.0) {
    r.beta_cr = 0.0;
    r.lo = 0.0;
    r.hi = 0.0;
    return r;
  }
  if (!increasing || any_pole) {
    r.beta_cr = min_value;
    r.lo = 0.0;
    r.hi = min_value;
    r.residual = kNaN;
    r.bracket_only = true;
    r.trace.push_back({min_value, true});
    return r;
  }

  // beta(k) = beta_0 + c u + O(k^2 ln k) as k -> 0.
  auto extrapolate = [&](double k1, double k2) {
    const double u1 = small_k_variable(k1, b), u2 = small_k_variable(k2, b);
    const double b1 = beta_of_k(k1, a, mode).value, b2 = beta_of_k(k2, a, mode).value;
    r.iterations += 2;
    return (b2 * u1 - b1 * u2) / (u1 - u2);
  };
  const double coarse = extrapolate(1e-8, 1e-16);
  const double fine = extrapolate(1e-16, 1e-32);
  r.beta_cr = std::max(fine, 0.0);
  r.residual = std::fabs(fine - coarse);
  r.lo = std::max(0.0, r.beta_cr - r.residual);
  r.hi = std::min(min_value, r.beta_cr + r.residual);
  return r;
}

std::vector<SweepRow> beta_cr_sweep(std::span<const double> a_values, const Family& family) {
  std::vector<SweepRow> rows;
  rows.reserve(a_values.size());
  for (double a : a_values) {
    SweepRow row;
    row.a = a;
    try {
      CriticalResult r;
      if (family.dim == 1) {
        r = beta_cr_search(Problem1D{a, 0.0, family.bc}, family.tol);
        row.check = a * r.beta_cr;
      } else if (family.dim == 2) {
        r = beta_cr_curve_infimum(a, family.mode);
        row.check = (1.0 + a) * std::log1p(a) * r.beta_cr;
      } else {
        throw std::invalid_argument("beta_cr_sweep: dim must be 1 or 2");
      }
      row.beta_cr = r.beta_cr;
      row.method = r.method;
      row.bracket_only = r.bracket_only;
    } catch (const std::exception& e) {
      row.beta_cr = kNaN;
      row.check = kNaN;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace deltacrit
