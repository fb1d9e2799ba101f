#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "deltacrit/dispersion2d.hpp"
#include "mp_bessel.hpp"

using namespace deltacrit;
using mpref::Fn;

// Reference values were computed with mpmath at 30 digits.

TEST_CASE("printed g at reference points") {
  CHECK(g_eval(1.0, 0.5, InteriorBasis::PaperLiteral).value == doctest::Approx(1.47383340112980251662).epsilon(1e-12));
  CHECK(g_eval(3.0, 2.0, InteriorBasis::PaperLiteral).value == doctest::Approx(-3.86288626230201822831).epsilon(1e-12));
  CHECK(g_eval(7.5, 10.0, InteriorBasis::PaperLiteral).value == doctest::Approx(-2.48657510820869913289).epsilon(1e-12));
}

TEST_CASE("printed g against the MPFR Bessel series") {
  for (double a : {0.5, 2.0, 4.0}) {
    for (double k = 0.3; k < 6.0; k += 0.37) {
      const double b = 1.0 + a;
      const double y0k = mpref::eval(Fn::Y0, k), j0k = mpref::eval(Fn::J0, k);
      const double num = -y0k * mpref::eval(Fn::J1, k * b) + j0k * mpref::eval(Fn::Y1, k * b);
      const double den = y0k * mpref::eval(Fn::J0, k * b) - j0k * mpref::eval(Fn::Y0, k * b);
      const GValue g = g_eval(k, a, InteriorBasis::PaperLiteral);
      REQUIRE_FALSE(g.pole);
      CHECK(g.value == doctest::Approx(num / den).epsilon(1e-10));
    }
  }
}

TEST_CASE("modified g against the MPFR Bessel series") {
  CHECK(g_eval(1.0, 1.0, InteriorBasis::ModifiedInterior).value ==
        doctest::Approx(-1.03827098078931781550).epsilon(1e-13));
  for (double a : {0.25, 1.0, 5.0}) {
    for (double k : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0}) {
      const double b = 1.0 + a;
      const double k0 = mpref::eval(Fn::K0, k), i0 = mpref::eval(Fn::I0, k);
      const double num = -(k0 * mpref::eval(Fn::I1, k * b) + i0 * mpref::eval(Fn::K1, k * b));
      const double den = k0 * mpref::eval(Fn::I0, k * b) - i0 * mpref::eval(Fn::K0, k * b);
      CHECK(g_eval(k, a, InteriorBasis::ModifiedInterior).value == doctest::Approx(num / den).epsilon(1e-12));
    }
  }
}

TEST_CASE("modified g stays finite for large k") {
  const GValue g = g_eval(500.0, 3.0, InteriorBasis::ModifiedInterior);
  CHECK_FALSE(g.pole);
  // Interior solution ~ sinh(k(r-1)), so g -> -1 as k grows.
  CHECK(g.value == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("coupling curves") {
  CHECK(beta_of_k(1.0, 1.0, ShellMode::PaperEq13).value == doctest::Approx(0.228036929818907975743).epsilon(1e-13));
  const double ratio = mpref::k_ratio(2.0);
  const double g_mod = g_eval(1.0, 1.0, InteriorBasis::ModifiedInterior).value;
  CHECK(beta_of_k(1.0, 1.0, ShellMode::Modified).value == doctest::Approx(ratio - g_mod).epsilon(1e-13));
  const double g_printed = g_eval(1.0, 1.0, InteriorBasis::PaperLiteral).value;
  CHECK(beta_of_k(1.0, 1.0, ShellMode::Paper).value == doctest::Approx(g_printed + ratio).epsilon(1e-13));
}

TEST_CASE("modified bound states at reference couplings") {
  auto states = solve_bound_states_2d({1.0, 3.0, ShellMode::Modified});
  REQUIRE(states.size() == 1);
  CHECK(states[0].k == doctest::Approx(1.43264311267792418927).epsilon(1e-12));
  CHECK(states[0].jump_residual < 1e-10);
  states = solve_bound_states_2d({1.0, 1.0, ShellMode::Modified});
  REQUIRE(states.size() == 1);
  CHECK(states[0].k == doctest::Approx(0.102062411963976969835).epsilon(1e-11));
}

TEST_CASE("modified: no state below 1/((1+a) ln(1+a))") {
  for (double a : {0.5, 1.0, 3.0}) {
    const double beta_cr = 1.0 / ((1.0 + a) * std::log1p(a));
    CHECK(solve_bound_states_2d({a, 0.9 * beta_cr, ShellMode::Modified}).empty());
    CHECK(solve_bound_states_2d({a, 1.5 * beta_cr, ShellMode::Modified}).size() == 1);
  }
}

TEST_CASE("radial eigenfunctions") {
  for (ShellMode mode : {ShellMode::Modified, ShellMode::PaperEq13}) {
    const Problem2D p{1.0, 3.0, mode};
    for (const BoundState& s : solve_bound_states_2d(p)) {
      const auto y = eigenfunction_2d(s, p);
      CHECK(y.evaluate(1.0) == 0.0);
      CHECK(y.evaluate(2.0) == doctest::Approx(1.0));
      CHECK(y.outer().value(2.0) == doctest::Approx(1.0));
      CHECK(y.evaluate(3.0) == doctest::Approx(mpref::eval(Fn::K0, 3.0 * s.k) / mpref::eval(Fn::K0, 2.0 * s.k)).epsilon(1e-12));
      if (mode == ShellMode::Modified) CHECK(radial_jump_residual(y, p.beta) < 1e-10);
    }
  }
}

TEST_CASE("beta window") {
  const BetaWindow w = beta_window(2.0, 1.0);
  CHECK(w.lo == doctest::Approx(2.0 / (2.0 * 4.25)));
  CHECK(w.hi == doctest::Approx(0.25));
  for (double a : {0.5, 1.0, 10.0}) {
    for (double k = 0.01; k < 100.0; k *= 1.3) {
      const BetaWindow win = beta_window(k, a);
      const double beta = beta_of_k(k, a, ShellMode::PaperEq13).value;
      CHECK(win.lo < beta);
      CHECK(beta < win.hi);
      CHECK(win.hi < 0.5);
    }
  }
}

TEST_CASE("g curves: poles flagged for the printed basis, none for the modified one") {
  const auto printed = g_curve(2.0, 0.5, 10.0, 400, InteriorBasis::PaperLiteral);
  REQUIRE(printed.size() == 400);
  int flagged = 0;
  for (const GSample& s : printed) flagged += s.pole_flag ? 1 : 0;
  CHECK(flagged > 0);
  const auto modified = g_curve(2.0, 0.5, 10.0, 400, InteriorBasis::ModifiedInterior);
  for (const GSample& s : modified) {
    CHECK_FALSE(s.pole_flag);
    CHECK(std::isfinite(s.g));
  }
  CHECK(near_minus_one_fraction(modified) > near_minus_one_fraction(printed));
  const double f = near_minus_one_fraction(printed);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);
  CHECK(g_curve(1.0, 2.0, 2.0, 1, InteriorBasis::ModifiedInterior).size() == 1);
  CHECK_THROWS_AS(g_curve(1.0, 0.0, 1.0, 5, InteriorBasis::PaperLiteral), std::invalid_argument);
  CHECK_THROWS_AS(g_curve(1.0, 1.0, 2.0, 1, InteriorBasis::PaperLiteral), std::invalid_argument);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(g_eval(0.0, 1.0, InteriorBasis::PaperLiteral), std::domain_error);
  CHECK_THROWS_AS(g_eval(1.0, -1.0, InteriorBasis::ModifiedInterior), std::domain_error);
  CHECK_THROWS_AS(solve_bound_states_2d({0.0, 1.0, ShellMode::Modified}), std::invalid_argument);
  CHECK_THROWS_AS(solve_bound_states_2d({1.0, -1.0, ShellMode::Modified}), std::invalid_argument);
  CHECK_THROWS_AS(parse_shell_mode("bogus"), std::invalid_argument);
  CHECK(parse_shell_mode("paper-eq13") == ShellMode::PaperEq13);
  CHECK(to_string(ShellMode::Modified) == "modified");
  CHECK(interior_basis(ShellMode::PaperEq13) == InteriorBasis::PaperLiteral);
}
