#pragma once

// Scalar root finding on sign-changing brackets, Sturm-sequence bisection for
// symmetric tridiagonal eigenvalues, and Richardson extrapolation.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace deltacrit::numerics {

/// A function value that may sit on (or numerically at) a pole.
struct Sample {
  double value = 0.0;
  bool pole = false;
};

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Thrown when f is non-finite at a point that is not flagged as a pole.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanOptions {
  int initial_subintervals = 512;
  int max_subintervals = 8192;
  int max_iterations = 200;
  // Sign changes whose refined |f| exceeds this and grew under refinement
  // are poles, not roots.
  double pole_threshold = 1e6;
};

using SampledFunction = std::function<Sample(double)>;
using ScalarFunction = std::function<double(double)>;

/// Refines a sign-change bracket to machine resolution (Brent: bisection with
/// secant / inverse-quadratic steps).  `converged` is set when
/// |f(root)| <= tol * (1 + |f'(root)|), f' estimated by a central difference.
RootResult refine_root(const ScalarFunction& f, Bracket bracket, double tol, int max_iterations = 200);

/// All sign-change roots of f on the open interval (lo, hi), ascending, at
/// most `max_roots` of them.  Poles are excluded.
std::vector<RootResult> find_roots(const SampledFunction& f, double lo, double hi, int max_roots,
                                   double tol, const ScanOptions& options = {});
std::vector<RootResult> find_roots(const ScalarFunction& f, double lo, double hi, int max_roots,
                                   double tol, const ScanOptions& options = {});

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below x.
int sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x);

/// The `count` smallest eigenvalues, ascending, by Sturm bisection.
std::vector<double> tridiag_smallest_eigs(std::span<const double> diag,
                                          std::span<const double> offdiag, int count);

/// (2^order v_h2 - v_h) / (2^order - 1).
double richardson(double v_h, double v_h2, int order);

}  // namespace deltacrit::numerics
