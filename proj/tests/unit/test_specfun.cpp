#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "deltacrit/specfun.hpp"
#include "mp_bessel.hpp"

namespace sf = deltacrit::specfun;
using mpref::Fn;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

double lib(Fn fn, double x) {
  switch (fn) {
    case Fn::J0: return sf::bessel_j0(x);
    case Fn::J1: return sf::bessel_j1(x);
    case Fn::Y0: return sf::bessel_y0(x);
    case Fn::Y1: return sf::bessel_y1(x);
    case Fn::I0: return sf::bessel_i0(x);
    case Fn::I1: return sf::bessel_i1(x);
    case Fn::K0: return sf::bessel_k0(x);
    case Fn::K1: return sf::bessel_k1(x);
  }
  return 0.0;
}

// Error scale: |f| for I and K, the modulus sqrt(J^2 + Y^2) for J and Y.
double scale(Fn fn, double x, double ref) {
  if (fn == Fn::J0 || fn == Fn::Y0) return std::hypot(mpref::eval(Fn::J0, x), mpref::eval(Fn::Y0, x));
  if (fn == Fn::J1 || fn == Fn::Y1) return std::hypot(mpref::eval(Fn::J1, x), mpref::eval(Fn::Y1, x));
  return std::fabs(ref);
}

}  // namespace

TEST_CASE("all eight functions agree with the MPFR series on [1e-8, 600]") {
  const auto xs = log_grid(1e-8, 600.0, 97);
  for (Fn fn : {Fn::J0, Fn::J1, Fn::Y0, Fn::Y1, Fn::I0, Fn::I1, Fn::K0, Fn::K1}) {
    double worst = 0.0;
    double worst_x = 0.0;
    for (double x : xs) {
      const double ref = mpref::eval(fn, x);
      const double err = std::fabs(lib(fn, x) - ref) / scale(fn, x, ref);
      if (err > worst) {
        worst = err;
        worst_x = x;
      }
    }
    INFO("fn " << static_cast<int>(fn) << " worst " << worst << " at x = " << worst_x);
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("scaled forms match the unscaled ones") {
  for (double x : log_grid(1e-6, 600.0, 61)) {
    CHECK(sf::bessel_i0e(x) == doctest::Approx(std::exp(-x) * mpref::eval(Fn::I0, x)).epsilon(1e-12));
    CHECK(sf::bessel_i1e(x) == doctest::Approx(std::exp(-x) * mpref::eval(Fn::I1, x)).epsilon(1e-12));
    CHECK(sf::bessel_k0e(x) == doctest::Approx(std::exp(x) * mpref::eval(Fn::K0, x)).epsilon(1e-12));
    CHECK(sf::bessel_k1e(x) == doctest::Approx(std::exp(x) * mpref::eval(Fn::K1, x)).epsilon(1e-12));
  }
}

TEST_CASE("scaled forms stay finite far beyond the unscaled range") {
  for (double x : {800.0, 1e4, 1e8}) {
    CHECK(std::isfinite(sf::bessel_i0e(x)));
    CHECK(sf::bessel_k0e(x) > 0.0);
    // Leading asymptotics e^{-x} I0 ~ 1/sqrt(2 pi x), e^{x} K0 ~ sqrt(pi/(2x)).
    CHECK(sf::bessel_i0e(x) * std::sqrt(2.0 * std::numbers::pi * x) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sf::bessel_k0e(x) / std::sqrt(std::numbers::pi / (2.0 * x)) == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("k_ratio agrees with the MPFR quotient, including where K0 underflows") {
  for (double x : log_grid(1e-8, 600.0, 80)) {
    CHECK(sf::k_ratio(x) == doctest::Approx(mpref::k_ratio(x)).epsilon(1e-13));
  }
  // K0(1000) is below the double range; the ratio is ~ 1 + 1/(2x).
  CHECK(sf::k_ratio(1000.0) == doctest::Approx(1.0 + 1.0 / 2000.0).epsilon(1e-6));
}

TEST_CASE("Wronskians") {
  for (double x : log_grid(0.05, 100.0, 400)) {
    const double wy = sf::bessel_j1(x) * sf::bessel_y0(x) - sf::bessel_j0(x) * sf::bessel_y1(x);
    CHECK(std::fabs(wy * std::numbers::pi * x / 2.0 - 1.0) < 1e-12);
    const double wk = sf::bessel_i0(x) * sf::bessel_k1(x) + sf::bessel_i1(x) * sf::bessel_k0(x);
    CHECK(std::fabs(wk * x - 1.0) < 1e-12);
  }
}

TEST_CASE("small-argument and zero behaviour") {
  CHECK(sf::bessel_j0(0.0) == 1.0);
  CHECK(sf::bessel_j1(0.0) == 0.0);
  CHECK(sf::bessel_i0(0.0) == 1.0);
  CHECK(sf::bessel_i1(0.0) == 0.0);
  // K0(x) ~ -ln(x/2) - gamma, K1(x) ~ 1/x.
  const double x = 1e-200;
  CHECK(sf::bessel_k0(x) == doctest::Approx(-std::log(x / 2.0) - std::numbers::egamma).epsilon(1e-14));
  CHECK(sf::bessel_k1(x) * x == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(sf::bessel_y0(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_y1(-1.0), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_k0(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_k1e(-2.0), std::domain_error);
  CHECK_THROWS_AS(sf::k_ratio(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_j0(-1e-300), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_i1(-1.0), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_y0(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(sf::bessel_i0(800.0), std::overflow_error);
  CHECK_NOTHROW(sf::bessel_i0(700.0));
}

TEST_CASE("kind parsing and dispatch") {
  const auto k = sf::parse_kind("k1");
  CHECK(k.family == sf::Family::K);
  CHECK(k.order == 1);
  CHECK(sf::to_string(sf::parse_kind("Y0")) == "Y0");
  CHECK(sf::bessel_eval(sf::parse_kind("j1"), 2.5) == sf::bessel_j1(2.5));
  CHECK_THROWS_AS(sf::parse_kind("Q0"), std::invalid_argument);
  CHECK_THROWS_AS(sf::parse_kind("J2"), std::invalid_argument);
  CHECK_THROWS_AS(sf::parse_kind(""), std::invalid_argument);
  CHECK_THROWS_AS(sf::bessel_eval(sf::BesselKind{sf::Family::J, 2}, 1.0), std::invalid_argument);
}

TEST_CASE("ratio bounds hold strictly with p = 1/4, q = 0") {
  for (double x : log_grid(1e-3, 50.0, 1000)) {
    const auto b = sf::k_ratio_bounds(x);
    const double r = sf::k_ratio(x);
    CHECK(b.lower < r);
    CHECK(r < b.upper);
  }
}

TEST_CASE("ratio bounds fail for p below 1/4 or q above 0") {
  // Asymptotically K1/K0 = 1 + 1/(2x) - 1/(8x^2) + ..., so the lower bound
  // needs p >= 1/4; near 0 the ratio grows like 1/(x ln(1/x)), beating any
  // 1/(2(x+q)) with q > 0.
  const auto xs = log_grid(1e-3, 50.0, 1000);
  const auto lower_fails = [&](double p) {
    return std::any_of(xs.begin(), xs.end(),
                       [&](double x) { return sf::k_ratio_bounds(x, {p, 0.0}).lower >= sf::k_ratio(x); });
  };
  const auto upper_fails = [&](double q) {
    return std::any_of(xs.begin(), xs.end(),
                       [&](double x) { return sf::k_ratio_bounds(x, {0.25, q}).upper <= sf::k_ratio(x); });
  };
  CHECK(lower_fails(0.0));
  CHECK(lower_fails(0.2));
  CHECK_FALSE(lower_fails(0.25));
  CHECK_FALSE(lower_fails(1.0));
  CHECK(upper_fails(0.1));
  CHECK_FALSE(upper_fails(0.0));
  CHECK_THROWS_AS(sf::k_ratio_bounds(1.0, {-0.1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(sf::k_ratio_bounds(1.0, {0.25, -1.0}), std::domain_error);
}
