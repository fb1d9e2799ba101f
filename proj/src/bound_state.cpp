#include "deltacrit/bound_state.hpp"

#include <stdexcept>
#include <utility>

namespace deltacrit {

BoundState make_bound_state(double k, double dispersion_residual, double jump_residual, bool converged) {
  return {k, -k * k, dispersion_residual, jump_residual, converged};
}

PiecewiseEigenfunction::PiecewiseEigenfunction(double origin, double breakpoint, Region inner, Region outer)
    : origin_(origin), breakpoint_(breakpoint), inner_(std::move(inner)), outer_(std::move(outer)) {
  if (!(breakpoint_ > origin_)) throw std::invalid_argument("eigenfunction: breakpoint must exceed origin");
}

double PiecewiseEigenfunction::evaluate(double x) const {
  if (x < origin_) throw std::domain_error("eigenfunction: x below the domain");
  return x <= breakpoint_ ? inner_.value(x) : outer_.value(x);
}

double PiecewiseEigenfunction::derivative(double x, Side side) const {
  if (x < origin_) throw std::domain_error("eigenfunction: x below the domain");
  if (x < breakpoint_ || (x == breakpoint_ && side == Side::Left)) return inner_.slope(x);
  return outer_.slope(x);
}

}  // namespace deltacrit
