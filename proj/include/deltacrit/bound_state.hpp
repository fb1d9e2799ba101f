#pragma once

#include <functional>
#include <string>

namespace deltacrit {

/// A solved bound state, lambda = -k^2.
struct BoundState {
  double k = 0.0;
  double lambda = 0.0;
  double dispersion_residual = 0.0;
  double jump_residual = 0.0;
  bool converged = true;
};

BoundState make_bound_state(double k, double dispersion_residual, double jump_residual, bool converged);

enum class Side { Left, Right };

/// Closed-form expression valid on one side of the breakpoint.
struct Region {
  std::string formula;
  std::function<double(double)> value;
  std::function<double(double)> slope;
};

/// Two-region eigenfunction normalised to 1 at the breakpoint.  The first
/// region covers [origin, breakpoint], the second [breakpoint, inf).
class PiecewiseEigenfunction {
 public:
  PiecewiseEigenfunction(double origin, double breakpoint, Region inner, Region outer);

  double origin() const { return origin_; }
  double breakpoint() const { return breakpoint_; }
  const Region& inner() const { return inner_; }
  const Region& outer() const { return outer_; }

  /// y(x); at the breakpoint the inner region is used.
  double evaluate(double x) const;
  /// y'(x); at the breakpoint `side` selects the one-sided derivative.
  double derivative(double x, Side side = Side::Left) const;

 private:
  double origin_;
  double breakpoint_;
  Region inner_;
  Region outer_;
};

}  // namespace deltacrit
