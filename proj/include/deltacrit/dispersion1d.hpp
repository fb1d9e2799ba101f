#pragma once

// Half-line problem  -y'' - beta delta(x - a) y = lambda y,  x >= 0,
// with a Dirichlet, Neumann or Robin (y'(0) + sigma y(0) = 0) condition at
// the origin.  Bound states lambda = -k^2 are the roots k > 0 of
//
//   Dirichlet  k + k coth(ka)                               = beta
//   Neumann    k + k tanh(ka)                               = beta
//   Robin      k + k (k - sigma coth(ka)) / (k coth(ka) - sigma) = beta
//
// obtained from the derivative jump -[y']_a = beta y(a).

#include <string>
#include <vector>

#include "deltacrit/bound_state.hpp"
#include "deltacrit/numerics.hpp"

namespace deltacrit {

enum class BoundaryKind { Dirichlet, Neumann, Robin };

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::Dirichlet;
  double sigma = 1.0;  // Robin only
};

std::string to_string(BoundaryKind kind);
/// "dirichlet" | "neumann" | "robin"; throws std::invalid_argument.
BoundaryKind parse_boundary(const std::string& name);

struct Problem1D {
  double a = 1.0;
  double beta = 0.0;
  BoundaryCondition bc{};

  /// Throws std::invalid_argument unless a > 0 and beta >= 0 (both finite).
  void validate() const;
};

/// Dimensionless variables z = 2ka, B = beta a.
struct ReducedForm {
  double z;
  double B;

  static ReducedForm from(double k, const Problem1D& problem);
};

/// k coth(k a); equals 1/a in the limit k -> 0.
double k_coth(double k, double a);

/// Left-hand side F(k) of the matching equation (no beta).  Infinite at the
/// Robin pole k coth(ka) = sigma.
double dispersion_lhs(double k, const Problem1D& problem);

/// F(k) - beta; `pole` is set at the Robin singularity.
numerics::Sample dispersion_residual(double k, const Problem1D& problem);

/// Upper end of the k scan: max(10 beta, 10/a, 10), widened by 10 sigma for Robin.
double scan_upper_limit(const Problem1D& problem);

/// Every bound state, ascending in k.  Empty when none exists.
std::vector<BoundState> solve_bound_states(const Problem1D& problem);

/// e^{-z} - (1 - z/B) (Dirichlet) or e^{-z} - (z/B - 1) (Neumann).
/// Throws std::domain_error for B = 0 and std::invalid_argument for Robin.
double reduced_residual(ReducedForm form, BoundaryKind kind);

/// Closed-form two-region eigenfunction with y(a) = 1.  Throws
/// std::domain_error when the Robin normalisation k cosh(ka) - sigma sinh(ka)
/// vanishes.
PiecewiseEigenfunction eigenfunction(const BoundState& state, const Problem1D& problem);

/// |-(y'(a+) - y'(a-)) - beta y(a)| from the analytic one-sided derivatives.
double jump_residual(const PiecewiseEigenfunction& eigfn, const Problem1D& problem);

}  // namespace deltacrit
