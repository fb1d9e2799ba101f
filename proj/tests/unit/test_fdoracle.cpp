#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "deltacrit/fdoracle.hpp"

using namespace deltacrit;

namespace {

Problem1D dirichlet(double a, double beta) { return {a, beta, {BoundaryKind::Dirichlet}}; }
Problem1D neumann(double a, double beta) { return {a, beta, {BoundaryKind::Neumann}}; }

// -k^2 for Dirichlet a = 1, beta = 3 (mpmath).
constexpr double kDirichletLambda = -1.99013003264015769;

}  // namespace

TEST_CASE("second-order convergence on the smooth Robin problem") {
  const Problem1D p{1.0, 0.0, {BoundaryKind::Robin, 1.0}};
  const double e1 = fd_halfline_spectrum(p, {0.02, 40.0}, 1).front() + 1.0;
  const double e2 = fd_halfline_spectrum(p, {0.01, 40.0}, 1).front() + 1.0;
  const double ratio = e1 / e2;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
  const auto r = fd_halfline_richardson(p, {1e-3, 40.0}, 1);
  CHECK(std::fabs(r.front().value + 1.0) < 1e-5);
}

TEST_CASE("on-node delta: error shrinks with h and Richardson beats both inputs") {
  const Problem1D p = dirichlet(1.0, 3.0);
  const auto r = fd_halfline_richardson(p, {0.01, 30.0}, 1).front();
  const double e_coarse = std::fabs(r.coarse - kDirichletLambda);
  const double e_fine = std::fabs(r.fine - kDirichletLambda);
  const double e_extrap = std::fabs(r.value - kDirichletLambda);
  CHECK(e_fine < e_coarse);
  CHECK(e_extrap < e_fine);
  CHECK(e_extrap / std::fabs(kDirichletLambda) < 1e-3);
}

TEST_CASE("Dirichlet below threshold has no negative eigenvalue") {
  const auto eig = fd_halfline_spectrum(dirichlet(1.0, 0.5), {1e-3, 60.0}, 1);
  CHECK(eig.front() > -1e-6);
}

TEST_CASE("Neumann and Robin ghost nodes keep the matrix symmetric and accurate") {
  // Neumann a = 1, beta = 1: k = 0.639232271380536897555.
  const double k = 0.639232271380536897555;
  const auto r = fd_halfline_richardson(neumann(1.0, 1.0), {2e-3, 60.0}, 1).front();
  CHECK(r.value == doctest::Approx(-k * k).epsilon(1e-5));
}

TEST_CASE("count returns ascending eigenvalues") {
  const auto eig = fd_halfline_spectrum(dirichlet(1.0, 3.0), {0.01, 20.0}, 4);
  REQUIRE(eig.size() == 4);
  for (std::size_t i = 1; i < eig.size(); ++i) CHECK(eig[i - 1] < eig[i]);
  CHECK(eig[0] < 0.0);
  CHECK(eig[1] > 0.0);
}

TEST_CASE("radial operator without a shell is nonnegative") {
  const auto eig = fd_radial_spectrum({1.0, 0.0, ShellMode::Modified}, {0.01, 30.0}, 3);
  CHECK(eig.front() > 0.0);
}

TEST_CASE("radial spectrum matches the modified secular root") {
  // Modified a = 1, beta = 3: k = 1.43264311267792418927.
  const double k = 1.43264311267792418927;
  const auto r = fd_radial_richardson({1.0, 3.0, ShellMode::Modified}, {0.01, 30.0}, 1).front();
  CHECK(r.value == doctest::Approx(-k * k).epsilon(1e-4));
}

TEST_CASE("doubling the outer radius leaves the bound state unchanged") {
  const Problem2D p{1.0, 3.0, ShellMode::Modified};
  const double near = fd_radial_spectrum(p, {0.01, 32.0}, 1).front();
  const double far = fd_radial_spectrum(p, {0.01, 64.0}, 1).front();
  CHECK(std::fabs(near - far) < 1e-8);
}

TEST_CASE("narrow well against the exact rectangular well") {
  // Smallest eigenvalue of -y'' - (beta/w) 1_{|x-a|<w/2} y with the origin
  // condition, from the transcendental matching equation at 30 digits.
  const std::vector<double> widths{0.2, 0.1, 0.05, 0.025};
  const std::vector<double> exact_dirichlet{-1.58997947173594758, -1.77124368454705971, -1.87517848833903663,
                                            -1.93115428124800619};
  const auto d = narrow_well_convergence(dirichlet(1.0, 3.0), widths);
  REQUIRE(d.size() == widths.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i].width == widths[i]);
    CHECK(d[i].lambda == doctest::Approx(exact_dirichlet[i]).epsilon(1e-4));
  }
  const std::vector<double> wide{0.2, 0.1, 0.05};
  const std::vector<double> exact_neumann{-0.389027775997377681, -0.398410222965750437, -0.403404751927581970};
  const auto n = narrow_well_convergence(neumann(1.0, 1.0), wide);
  for (std::size_t i = 0; i < n.size(); ++i) CHECK(n[i].lambda == doctest::Approx(exact_neumann[i]).epsilon(1e-4));
}

TEST_CASE("narrow well approaches the delta eigenvalue monotonically") {
  const std::vector<double> widths{0.2, 0.1, 0.05, 0.025};
  const auto d = narrow_well_convergence(dirichlet(1.0, 3.0), widths);
  for (std::size_t i = 1; i < d.size(); ++i) {
    CHECK(std::fabs(d[i].lambda - kDirichletLambda) < std::fabs(d[i - 1].lambda - kDirichletLambda));
  }
}

TEST_CASE("narrow well with beta = 0 has no bound state") {
  const std::vector<double> widths{0.2, 0.1};
  for (const WellPoint& w : narrow_well_convergence(dirichlet(1.0, 0.0), widths)) CHECK(w.lambda >= 0.0);
}

TEST_CASE("node alignment") {
  const FdConfig c = align_to_node({0.3, 10.0}, 0.0, 1.0);
  CHECK(std::fabs(1.0 / c.h - std::round(1.0 / c.h)) < 1e-12);
  CHECK(c.h == doctest::Approx(1.0 / 3.0));
  const FdConfig r = align_to_node({0.013, 50.0}, 1.0, 2.5);
  CHECK(std::fabs(1.5 / r.h - std::round(1.5 / r.h)) < 1e-12);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(fd_halfline_spectrum(dirichlet(1.0, 1.0), {0.3, 10.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_halfline_spectrum(dirichlet(1.0, 1.0), {0.0, 10.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_halfline_spectrum(dirichlet(1.0, 1.0), {0.01, 0.5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_halfline_spectrum(dirichlet(1.0, 1.0), {0.01, 10.0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fd_halfline_spectrum(dirichlet(1.0, 1.0), {0.01, 10.0, DeltaHandling::NarrowWell, 0.015}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(fd_radial_spectrum({1.0, 1.0, ShellMode::Modified}, {0.01, 1.5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_radial_spectrum({1.0, 1.0, ShellMode::Modified}, {0.3, 10.0}, 1), std::invalid_argument);
  const std::vector<double> increasing{0.1, 0.2};
  CHECK_THROWS_AS(narrow_well_convergence(dirichlet(1.0, 1.0), increasing), std::invalid_argument);
  CHECK_THROWS_AS(align_to_node({0.1, 10.0}, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("arbitration at the g = -1 example coupling") {
  // The coupling is below the I0/K0 threshold: the radial operator has no
  // bound state there, while the printed basis reports spurious ones.
  for (double a : {0.5, 1.0}) {
    const double beta = beta_of_k(1.0, a, ShellMode::PaperEq13).value;
    const auto cmp = compare_modes_with_fd(a, beta, {0.01, 1.0 + a + 100.0});
    REQUIRE(cmp.size() == 3);
    CHECK(cmp[0].mode == ShellMode::Paper);
    CHECK(cmp[2].mode == ShellMode::Modified);
    CHECK(cmp[2].match);
    CHECK_FALSE(cmp[0].match);
    CHECK(cmp[2].fd_states == 0);
    CHECK(cmp[2].analytic_states == 0);
    CHECK(cmp[0].analytic_states > 0);
  }
}
