#pragma once

// Critical coupling: the infimum of the beta values that admit a bound state.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "deltacrit/dispersion1d.hpp"
#include "deltacrit/dispersion2d.hpp"

namespace deltacrit {

enum class CriticalMethod { AnalyticDirichlet1D, ExistenceBisection, CurveInfimum };

std::string to_string(CriticalMethod method);

struct Probe {
  double beta;
  bool has_state;
};

struct CriticalResult {
  double beta_cr = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  CriticalMethod method = CriticalMethod::ExistenceBisection;
  int iterations = 0;
  /// Bisection: final bracket width.  Curve infimum: spread between two
  /// independent extrapolations.
  double residual = 0.0;
  /// Set when the existence predicate flipped more than once along the
  /// probes (or the curve is not monotone); only the bracket is meaningful.
  bool bracket_only = false;
  std::vector<Probe> trace;
};

/// 1/a; throws std::domain_error for a <= 0.
double beta_cr_analytic_dirichlet_1d(double a);

/// Probe value below which a threshold is reported as zero.
inline constexpr double kZeroThresholdProbe = 1e-12;
/// Upper-bracket doubling gives up past this coupling.
inline constexpr double kMaxBracketBeta = 1099511627776.0;  // 2^40

/// Bisection on an existence predicate.  A state at 1e-12 gives beta_cr = 0
/// with bracket [0, 1e-12]; otherwise beta doubles from 1 until a state
/// appears (std::runtime_error past 2^40) and the bracket is halved until its
/// width is <= tol.
CriticalResult beta_cr_bisect(const std::function<bool(double)>& has_state, double tol);

/// Existence bisection for the 1D family (problem.beta is ignored).
CriticalResult beta_cr_search(const Problem1D& family, double tol);
/// Existence bisection for the 2D family.  The k scan floor (1e-6) makes
/// this biased upward when states near threshold have tiny k; prefer
/// beta_cr_curve_infimum for the shell.
CriticalResult beta_cr_search(const Problem2D& family, double tol);

/// inf over k > 0 of beta_of_k(k, a, mode).  Non-positive samples give 0.
/// A curve increasing in k is extrapolated to k -> 0 linearly in
/// u = 1/(ln(2/(kb)) - gamma); otherwise the grid minimum is returned with
/// bracket_only set.
CriticalResult beta_cr_curve_infimum(double a, ShellMode mode);

struct Family {
  int dim = 1;
  BoundaryCondition bc{};
  ShellMode mode = ShellMode::Modified;
  double tol = 1e-10;
};

struct SweepRow {
  double a = 0.0;
  double beta_cr = 0.0;
  CriticalMethod method = CriticalMethod::ExistenceBisection;
  /// a beta_cr in 1D, (1+a) ln(1+a) beta_cr in 2D.
  double check = 0.0;
  bool bracket_only = false;
  /// Empty unless this row failed; the sweep carries on.
  std::string error;
};

/// One row per a, in input order.  1D rows use beta_cr_search, 2D rows
/// beta_cr_curve_infimum.
std::vector<SweepRow> beta_cr_sweep(std::span<const double> a_values, const Family& family);

}  // namespace deltacrit
