#include "deltacrit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace deltacrit::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

double derivative_estimate(const ScalarFunction& f, double x) {
  const double step = 1e-6 * std::max(std::fabs(x), 1e-300);
  const double fp = f(x + step);
  const double fm = f(x - step);
  if (!std::isfinite(fp) || !std::isfinite(fm)) return 0.0;
  return (fp - fm) / (2.0 * step);
}

struct Scan {
  std::vector<double> xs;
  std::vector<Sample> fs;
};

Scan sample_grid(const SampledFunction& f, double lo, double hi, int n) {
  Scan s;
  s.xs.resize(static_cast<std::size_t>(n) + 1);
  s.fs.resize(s.xs.size());
  const double step = (hi - lo) / n;
  for (int i = 0; i <= n; ++i) {
    const double x = i == n ? hi : lo + step * i;
    const Sample v = f(x);
    if (!v.pole && !std::isfinite(v.value)) {
      throw EvaluationError("non-finite function value at x = " + std::to_string(x));
    }
    s.xs[static_cast<std::size_t>(i)] = x;
    s.fs[static_cast<std::size_t>(i)] = v;
  }
  return s;
}

enum class CandidateKind { ExactRoot, SignChange };

struct Candidate {
  CandidateKind kind;
  std::size_t index;  // node for ExactRoot, left node for SignChange
};

std::vector<Candidate> candidates(const Scan& s) {
  std::vector<Candidate> out;
  const std::size_t n = s.xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Sample& a = s.fs[i];
    const Sample& b = s.fs[i + 1];
    // Exact zeros at interior nodes; the endpoints of the open interval are excluded.
    if (i > 0 && !a.pole && a.value == 0.0) out.push_back({CandidateKind::ExactRoot, i});
    if (a.pole || b.pole) continue;
    if (opposite_signs(a.value, b.value)) out.push_back({CandidateKind::SignChange, i});
  }
  return out;
}

}  // namespace

RootResult refine_root(const ScalarFunction& f, Bracket bracket, double tol, int max_iterations) {
  if (!(bracket.lo < bracket.hi)) throw std::invalid_argument("refine_root: need lo < hi");
  if (!opposite_signs(bracket.f_lo, bracket.f_hi)) {
    throw std::invalid_argument("refine_root: bracket does not change sign");
  }
  double a = bracket.lo, b = bracket.hi, c = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi, fc = fb;
  double d = b - a, e = d;
  RootResult r;
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (opposite_signs(fb, fc) == false) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::fabs(b) + 1e-300;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) break;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double rb = fb / fc;
        p = s * (2.0 * xm * qa * (qa - rb) - (b - a) * (rb - 1.0));
        q = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
    if (!std::isfinite(fb)) {
      throw EvaluationError("non-finite function value during refinement at x = " + std::to_string(b));
    }
  }
  r.root = b;
  r.residual = fb;
  r.iterations = it;
  const double slope = derivative_estimate(f, b);
  r.converged = it < max_iterations && std::fabs(fb) <= tol * (1.0 + std::fabs(slope));
  return r;
}

std::vector<RootResult> find_roots(const SampledFunction& f, double lo, double hi, int max_roots,
                                   double tol, const ScanOptions& options) {
  if (!(lo < hi)) throw std::invalid_argument("find_roots: need lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("find_roots: tol must be positive");
  if (max_roots < 1) return {};

  int n = options.initial_subintervals;
  Scan scan = sample_grid(f, lo, hi, n);
  std::vector<Candidate> found = candidates(scan);
  while (n < options.max_subintervals) {
    Scan finer = sample_grid(f, lo, hi, 2 * n);
    std::vector<Candidate> finer_found = candidates(finer);
    n *= 2;
    const bool stable = finer_found.size() == found.size();
    scan = std::move(finer);
    found = std::move(finer_found);
    if (stable) break;
  }

  const ScalarFunction plain = [&f](double x) { return f(x).value; };
  std::vector<RootResult> roots;
  for (const Candidate& c : found) {
    if (static_cast<int>(roots.size()) >= max_roots) break;
    if (c.kind == CandidateKind::ExactRoot) {
      roots.push_back({scan.xs[c.index], 0.0, 0, true});
      continue;
    }
    const Bracket br{scan.xs[c.index], scan.xs[c.index + 1], scan.fs[c.index].value,
                     scan.fs[c.index + 1].value};
    RootResult r;
    try {
      r = refine_root(plain, br, tol, options.max_iterations);
    } catch (const EvaluationError&) {
      // Refinement ran into the singular point itself: that is a pole.
      continue;
    }
    const double flank = std::max(std::fabs(br.f_lo), std::fabs(br.f_hi));
    if (std::fabs(r.residual) > options.pole_threshold && std::fabs(r.residual) > flank) continue;
    if (f(r.root).pole) continue;
    roots.push_back(r);
  }
  return roots;
}

std::vector<RootResult> find_roots(const ScalarFunction& f, double lo, double hi, int max_roots,
                                   double tol, const ScanOptions& options) {
  const SampledFunction wrapped = [&f](double x) { return Sample{f(x), false}; };
  return find_roots(wrapped, lo, hi, max_roots, tol, options);
}

int sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x) {
  const std::size_t n = diag.size();
  if (n == 0) return 0;
  double max_off2 = 0.0;
  for (double e : offdiag) max_off2 = std::max(max_off2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off2);
  int count = 0;
  double q = diag[0] - x;
  if (std::fabs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_smallest_eigs(std::span<const double> diag,
                                          std::span<const double> offdiag, int count) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("tridiag_smallest_eigs: empty matrix");
  if (offdiag.size() + 1 != n) {
    throw std::invalid_argument("tridiag_smallest_eigs: offdiag must have length n-1");
  }
  if (count < 1 || static_cast<std::size_t>(count) > n) {
    throw std::invalid_argument("tridiag_smallest_eigs: count must be in [1, n]");
  }

  // Gershgorin enclosure.
  double lower = std::numeric_limits<double>::infinity();
  double upper = -lower;
  double diag_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::fabs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::fabs(offdiag[i]);
    lower = std::min(lower, diag[i] - radius);
    upper = std::max(upper, diag[i] + radius);
    diag_norm = std::max(diag_norm, std::fabs(diag[i]));
  }
  const double pad = 2.0 * kEps * std::max({std::fabs(lower), std::fabs(upper), 1.0});
  lower -= pad;
  upper += pad;
  // Bisection continues well past the required 1e-12 * max(1, |diag|_inf)
  // down to the floating-point resolution of the Sturm count itself.
  const double resolution =
      std::min(1e-12 * std::max(1.0, diag_norm), kEps * std::max(std::fabs(lower), std::fabs(upper)));

  std::vector<double> eigs;
  eigs.reserve(static_cast<std::size_t>(count));
  double floor = lower;
  for (int j = 0; j < count; ++j) {
    double lo = floor, hi = upper;
    // Invariant: sturm_count(lo) <= j < sturm_count(hi).
    for (int it = 0; it < 2000; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double width = hi - lo;
      if (width <= std::max(4.0 * kEps * std::max(std::fabs(lo), std::fabs(hi)), resolution)) break;
      if (sturm_count(diag, offdiag, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const double value = 0.5 * (lo + hi);
    eigs.push_back(value);
    floor = lo;
  }
  return eigs;
}

double richardson(double v_h, double v_h2, int order) {
  if (order < 1) throw std::invalid_argument("richardson: order must be >= 1");
  const double factor = std::ldexp(1.0, order);
  return (factor * v_h2 - v_h) / (factor - 1.0);
}

}  // namespace deltacrit::numerics
