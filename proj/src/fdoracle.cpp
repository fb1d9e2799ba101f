#include "deltacrit/fdoracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "deltacrit/numerics.hpp"

namespace deltacrit {

namespace {

struct Tridiag {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

void check_config(const FdConfig& config) {
  if (!(config.h > 0.0) || !std::isfinite(config.h)) throw std::invalid_argument("fd: h must be > 0");
  if (!(config.extent > 0.0) || !std::isfinite(config.extent)) {
    throw std::invalid_argument("fd: extent must be > 0");
  }
  if (config.delta == DeltaHandling::NarrowWell && !(config.well_width >= 2.0 * config.h)) {
    throw std::invalid_argument("fd: narrow well width must be >= 2h");
  }
}

long node_count(double length, double h) {
  const double n = std::round(length / h);
  if (n > 5e7) throw std::invalid_argument("fd: grid too large");
  return static_cast<long>(n);
}

// Index of the node at `offset` from the origin, or throws when it is off
// the grid by more than rounding.
long node_of(double offset, double h) {
  const double n = offset / h;
  const double nearest = std::round(n);
  if (std::fabs(n - nearest) > 1e-9 * std::max(1.0, nearest)) {
    throw std::invalid_argument("fd: delta position is not on a grid node (use align_to_node)");
  }
  return static_cast<long>(nearest);
}

// Mean of the well potential -beta/w on [center - w/2, center + w/2] over
// the cell [x - h/2, x + h/2].
double well_cell_average(double x, double h, double center, double width, double beta) {
  const double lo = std::max(x - 0.5 * h, center - 0.5 * width);
  const double hi = std::min(x + 0.5 * h, center + 0.5 * width);
  if (hi <= lo) return 0.0;
  return -(beta / width) * (hi - lo) / h;
}

void add_delta(Tridiag& m, const FdConfig& config, double beta, double origin, long first_index,
               double position, auto node_x) {
  if (beta == 0.0) return;
  const double h = config.h;
  if (config.delta == DeltaHandling::OnNode) {
    const long idx = node_of(position - origin, h) - first_index;
    if (idx < 0 || idx >= static_cast<long>(m.diag.size())) {
      throw std::invalid_argument("fd: delta lies outside the computational domain");
    }
    m.diag[static_cast<std::size_t>(idx)] -= beta / h;
    return;
  }
  for (std::size_t i = 0; i < m.diag.size(); ++i) {
    m.diag[i] += well_cell_average(node_x(i), h, position, config.well_width, beta);
  }
}

Tridiag halfline_matrix(const Problem1D& problem, const FdConfig& config) {
  const double h = config.h;
  const double inv_h2 = 1.0 / (h * h);
  const long n_total = node_count(config.extent, h);  // node n_total is x = L, where y = 0
  const bool dirichlet = problem.bc.kind == BoundaryKind::Dirichlet;
  const long first = dirichlet ? 1 : 0;
  const long n = n_total - first;
  if (n < 2) throw std::invalid_argument("fd: extent too small for the step");

  Tridiag m{std::vector<double>(static_cast<std::size_t>(n), 2.0 * inv_h2),
            std::vector<double>(static_cast<std::size_t>(n - 1), -inv_h2)};
  if (!dirichlet) {
    // Ghost node y_{-1} = y_1 + 2 h sigma y_0 (sigma = 0 for Neumann); the
    // resulting row 0 is symmetrised by scaling y_0 with 1/sqrt(2).
    const double sigma = problem.bc.kind == BoundaryKind::Robin ? problem.bc.sigma : 0.0;
    m.diag[0] = (2.0 - 2.0 * h * sigma) * inv_h2;
    m.offdiag[0] = -std::sqrt(2.0) * inv_h2;
  }
  add_delta(m, config, problem.beta, 0.0, first, problem.a,
            [first, h](std::size_t i) { return static_cast<double>(static_cast<long>(i) + first) * h; });
  return m;
}

Tridiag radial_matrix(const Problem2D& problem, const FdConfig& config) {
  const double h = config.h;
  const double inv_h2 = 1.0 / (h * h);
  const long n_total = node_count(config.extent - 1.0, h);  // nodes 1..n_total-1 are unknowns
  const long n = n_total - 1;
  if (n < 2) throw std::invalid_argument("fd: extent too small for the step");
  auto r = [h](long i) { return 1.0 + static_cast<double>(i) * h; };

  Tridiag m{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n - 1))};
  for (long i = 1; i <= n; ++i) {
    const double ri = r(i);
    // (r_{i+1/2} + r_{i-1/2}) / (h^2 r_i) with r_{i+-1/2} = r_i +- h/2
    m.diag[static_cast<std::size_t>(i - 1)] = 2.0 * inv_h2;
    if (i < n) {
      m.offdiag[static_cast<std::size_t>(i - 1)] = -(ri + 0.5 * h) * inv_h2 / std::sqrt(ri * r(i + 1));
    }
  }
  add_delta(m, config, problem.beta, 1.0, 1, problem.shell_radius(),
            [&r](std::size_t i) { return r(static_cast<long>(i) + 1); });
  return m;
}

std::vector<double> smallest(const Tridiag& m, int count) {
  if (count < 1) throw std::invalid_argument("fd: count must be >= 1");
  if (static_cast<std::size_t>(count) > m.diag.size()) throw std::invalid_argument("fd: count exceeds grid size");
  return numerics::tridiag_smallest_eigs(m.diag, m.offdiag, count);
}

std::vector<Extrapolated> combine(const std::vector<double>& coarse, const std::vector<double>& fine) {
  std::vector<Extrapolated> out;
  const std::size_t n = std::min(coarse.size(), fine.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({coarse[i], fine[i], numerics::richardson(coarse[i], fine[i], 2)});
  return out;
}

}  // namespace

FdConfig align_to_node(FdConfig config, double origin, double position) {
  check_config(config);
  const double offset = position - origin;
  if (!(offset > 0.0)) throw std::invalid_argument("fd: position must lie beyond the origin");
  const double n = std::max(1.0, std::round(offset / config.h));
  config.h = offset / n;
  return config;
}

std::vector<double> fd_halfline_spectrum(const Problem1D& problem, const FdConfig& config, int count) {
  problem.validate();
  check_config(config);
  if (!(config.extent > problem.a)) throw std::invalid_argument("fd: extent must exceed a");
  return smallest(halfline_matrix(problem, config), count);
}

std::vector<double> fd_radial_spectrum(const Problem2D& problem, const FdConfig& config, int count) {
  problem.validate();
  check_config(config);
  if (!(config.extent > problem.shell_radius())) throw std::invalid_argument("fd: extent must exceed 1 + a");
  return smallest(radial_matrix(problem, config), count);
}

std::vector<Extrapolated> fd_halfline_richardson(const Problem1D& problem, const FdConfig& config, int count) {
  FdConfig fine = config;
  fine.h = 0.5 * config.h;
  return combine(fd_halfline_spectrum(problem, config, count), fd_halfline_spectrum(problem, fine, count));
}

std::vector<Extrapolated> fd_radial_richardson(const Problem2D& problem, const FdConfig& config, int count) {
  FdConfig fine = config;
  fine.h = 0.5 * config.h;
  return combine(fd_radial_spectrum(problem, config, count), fd_radial_spectrum(problem, fine, count));
}

std::vector<WellPoint> narrow_well_convergence(const Problem1D& problem, std::span<const double> widths,
                                               const FdConfig& base) {
  std::vector<WellPoint> out;
  out.reserve(widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const double w = widths[i];
    if (!(w > 0.0)) throw std::invalid_argument("narrow well: widths must be positive");
    if (i > 0 && !(w < widths[i - 1])) throw std::invalid_argument("narrow well: widths must be strictly decreasing");
    FdConfig config = base;
    config.delta = DeltaHandling::NarrowWell;
    config.well_width = w;
    out.push_back({w, fd_halfline_spectrum(problem, config, 1).front()});
  }
  return out;
}

std::vector<WellPoint> narrow_well_convergence(const Problem1D& problem, std::span<const double> widths) {
  if (widths.empty()) return {};
  const double w_min = *std::min_element(widths.begin(), widths.end());
  FdConfig base;
  base.h = std::min(1e-3, w_min / 20.0);
  base.extent = std::max(40.0, 10.0 * problem.a);
  return narrow_well_convergence(problem, widths, base);
}

std::vector<ModeComparison> compare_modes_with_fd(double a, double beta, const FdConfig& config, double rel_tol) {
  const Problem2D base{a, beta, ShellMode::Modified};
  const FdConfig aligned = align_to_node(config, 1.0, base.shell_radius());

  std::vector<std::vector<BoundState>> analytic;
  std::size_t max_states = 0;
  for (ShellMode mode : {ShellMode::Paper, ShellMode::PaperEq13, ShellMode::Modified}) {
    analytic.push_back(solve_bound_states_2d(Problem2D{a, beta, mode}));
    max_states = std::max(max_states, analytic.back().size());
  }
  const auto fd = fd_radial_richardson(base, aligned, static_cast<int>(max_states) + 1);
  std::vector<double> fd_negative;
  for (const Extrapolated& e : fd) {
    if (e.value < 0.0) fd_negative.push_back(e.value);
  }

  std::vector<ModeComparison> out;
  int index = 0;
  for (ShellMode mode : {ShellMode::Paper, ShellMode::PaperEq13, ShellMode::Modified}) {
    std::vector<double> lambdas;
    for (const BoundState& s : analytic[static_cast<std::size_t>(index++)]) lambdas.push_back(s.lambda);
    std::sort(lambdas.begin(), lambdas.end());

    ModeComparison c{mode, static_cast<int>(lambdas.size()), static_cast<int>(fd_negative.size()),
                     lambdas.empty() ? std::nan("") : lambdas.front(),
                     fd_negative.empty() ? std::nan("") : fd_negative.front(), std::nan(""), false};
    const std::size_t paired = std::min(lambdas.size(), fd_negative.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < paired; ++i) {
      worst = std::max(worst, std::fabs(lambdas[i] - fd_negative[i]) / std::fabs(fd_negative[i]));
    }
    if (paired > 0) c.rel_diff = worst;
    c.match = lambdas.size() == fd_negative.size() && (paired == 0 || worst <= rel_tol);
    out.push_back(c);
  }
  return out;
}

}  // namespace deltacrit
