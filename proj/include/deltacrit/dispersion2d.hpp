#pragma once

// Radial problem outside the unit disk with a delta shell at r = b = 1 + a:
//
//   -(1/r)(r y')' - beta delta(r - b) y = lambda y,   y(1) = 0,  y(b) = 1,
//
// lambda = -k^2.  The exterior solution is K0(kr)/K0(kb).  The matching
// condition -[y']_b = beta reads
//
//   beta / k = g(k, a) + K1(kb)/K0(kb)          (printed J0/Y0 interior)
//   beta / k = K1(kb)/K0(kb) - g_mod(k, a)      (I0/K0 interior)
//
// with g as printed and g_mod = -[K0(k) I1(kb) + I0(k) K1(kb)] /
// [K0(k) I0(kb) - I0(k) K0(kb)].  Substituting g = -1 gives the shortcut
// beta = k (K1(kb)/K0(kb) - 1).

#include <string>
#include <vector>

#include "deltacrit/bound_state.hpp"
#include "deltacrit/numerics.hpp"

namespace deltacrit {

enum class InteriorBasis { PaperLiteral, ModifiedInterior };

/// Which secular equation is solved.
///   Paper      J0/Y0 interior with the exact g
///   PaperEq13  J0/Y0 interior with g replaced by -1
///   Modified   I0/K0 interior
enum class ShellMode { Paper, PaperEq13, Modified };

std::string to_string(ShellMode mode);
/// "paper" | "paper-eq13" | "modified"; throws std::invalid_argument.
ShellMode parse_shell_mode(const std::string& name);
InteriorBasis interior_basis(ShellMode mode);

struct Problem2D {
  double a = 1.0;
  double beta = 0.0;
  ShellMode mode = ShellMode::Modified;

  double shell_radius() const { return 1.0 + a; }
  /// Throws std::invalid_argument unless a > 0 and beta >= 0 (both finite).
  void validate() const;
};

struct GValue {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  bool pole = false;
};

/// g(k, a) for the chosen interior basis.  `pole` is set when the
/// denominator vanishes to working precision; `value` is then NaN.
GValue g_eval(double k, double a, InteriorBasis basis);

struct GSample {
  double k;
  double g;  // NaN at a pole
  bool pole_flag;
};

/// g on `points` equally spaced k in [k_min, k_max].  A sample is flagged
/// when g_eval reports a pole or the denominator changed sign since the
/// previous sample.
std::vector<GSample> g_curve(double a, double k_min, double k_max, int points, InteriorBasis basis);

/// Share of unflagged samples with |g + 1| < band.
double near_minus_one_fraction(const std::vector<GSample>& curve, double band = 0.15);

/// The coupling that places a bound state at wavenumber k.
numerics::Sample beta_of_k(double k, double a, ShellMode mode);

struct BetaWindow {
  double lo;
  double hi;
};

/// (k / (2(k(a+1) + 1/4)), k / (2k(a+1))): the window the K1/K0 ratio bounds
/// impose on the g = -1 coupling.
BetaWindow beta_window(double k, double a);

/// Lower end of the k scan (fixed) and upper end max(10 beta (1+a), 10).
inline constexpr double kShellScanFloor = 1e-6;
double scan_upper_limit(const Problem2D& problem);

std::vector<BoundState> solve_bound_states_2d(const Problem2D& problem);

/// Two-region radial eigenfunction on [1, inf) with y(1) = 0, y(1+a) = 1.
/// The interior follows the problem's basis (printed J0/Y0 for both J0/Y0
/// modes).  Throws std::domain_error when the interior normalisation vanishes.
PiecewiseEigenfunction eigenfunction_2d(const BoundState& state, const Problem2D& problem);

/// |-(y'(b+) - y'(b-)) - beta y(b)|.
double radial_jump_residual(const PiecewiseEigenfunction& eigfn, double beta);

}  // namespace deltacrit
