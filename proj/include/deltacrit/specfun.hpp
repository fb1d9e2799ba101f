#pragma once

// Cylinder functions J0, J1, Y0, Y1 and modified cylinder functions
// I0, I1, K0, K1 of real argument, plus the K1/K0 ratio bounds.
//
// Accuracy target is 1e-12 relative on [1e-8, 600] (relative to the
// modulus sqrt(J^2 + Y^2) for the oscillating family, where relative error
// at a zero is not meaningful).  Y and K throw std::domain_error for x <= 0,
// J and I accept x >= 0.  Unscaled I throws std::overflow_error once the
// result is no longer representable; the scaled forms never overflow.

#include <string>

namespace deltacrit::specfun {

enum class Family { J, Y, I, K };

struct BesselKind {
  Family family = Family::J;
  int order = 0;  // 0 or 1
};

/// Parses names like "J0", "k1" (case-insensitive). Throws std::invalid_argument.
BesselKind parse_kind(const std::string& name);
std::string to_string(BesselKind kind);

double bessel_eval(BesselKind kind, double x);

double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);
double bessel_i0(double x);
double bessel_i1(double x);
double bessel_k0(double x);
double bessel_k1(double x);

// Exponentially scaled forms: e^{-x} I_n(x) and e^{x} K_n(x).
double bessel_i0e(double x);
double bessel_i1e(double x);
double bessel_k0e(double x);
double bessel_k1e(double x);

/// K1(x)/K0(x) from the scaled forms, finite for every x > 0.
double k_ratio(double x);

struct RatioBoundParams {
  double p = 0.25;
  double q = 0.0;
};

struct RatioBounds {
  double lower;
  double upper;
};

/// (1 + 1/(2(x+p)), 1 + 1/(2(x+q))).  With p >= 1/4 and q = 0 the ratio
/// K1(x)/K0(x) lies strictly between the two.
RatioBounds k_ratio_bounds(double x, RatioBoundParams params = {});

}  // namespace deltacrit::specfun
