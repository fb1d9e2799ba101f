#pragma once

// Finite-difference spectra used as an independent check on the secular
// equations.  Both problems are truncated at `extent` with a Dirichlet far
// condition and reduced to symmetric tridiagonal eigenproblems.

#include <span>
#include <vector>

#include "deltacrit/dispersion1d.hpp"
#include "deltacrit/dispersion2d.hpp"

namespace deltacrit {

enum class DeltaHandling { OnNode, NarrowWell };

struct FdConfig {
  double h = 1e-3;
  /// Truncation length L (half-line) or outer radius R (radial).
  double extent = 40.0;
  DeltaHandling delta = DeltaHandling::OnNode;
  /// Width of the rectangular well (depth beta / width) under NarrowWell.
  double well_width = 0.0;
};

/// Copy of `config` with h shrunk (or grown) to the nearest step that puts
/// `position` on a node of a grid starting at `origin`.
FdConfig align_to_node(FdConfig config, double origin, double position);

/// The `count` smallest eigenvalues (ascending, of either sign) of the
/// 3-point half-line discretisation.  Throws std::invalid_argument on a bad
/// config: a off the grid under OnNode, width < 2h under NarrowWell, or fewer
/// than `count` interior nodes.
std::vector<double> fd_halfline_spectrum(const Problem1D& problem, const FdConfig& config, int count);

/// The `count` smallest eigenvalues of the radial operator on [1, R] with
/// Dirichlet ends and the shell at r = 1 + a.  Same errors as above.
std::vector<double> fd_radial_spectrum(const Problem2D& problem, const FdConfig& config, int count);

struct Extrapolated {
  double coarse;  // step h
  double fine;    // step h/2
  double value;   // Richardson, order 2
};

/// Runs at h and h/2 and extrapolates eigenvalue by eigenvalue.
std::vector<Extrapolated> fd_halfline_richardson(const Problem1D& problem, const FdConfig& config, int count);
std::vector<Extrapolated> fd_radial_richardson(const Problem2D& problem, const FdConfig& config, int count);

struct WellPoint {
  double width;
  double lambda;  // smallest eigenvalue with the narrow well of this width
};

/// Smallest eigenvalue for each width (which must be positive, strictly
/// decreasing and >= 2h) with the delta replaced by a well of depth
/// beta / width centred on a.
std::vector<WellPoint> narrow_well_convergence(const Problem1D& problem, std::span<const double> widths,
                                               const FdConfig& base);
/// Same with h = min(1e-3, w_min / 20) and extent max(40, 10 a).
std::vector<WellPoint> narrow_well_convergence(const Problem1D& problem, std::span<const double> widths);

/// One shell mode's secular roots against the radial FD spectrum at the same
/// (a, beta).  The two agree when they have the same number of bound states
/// and paired eigenvalues (ascending) differ by at most `rel_tol`.
struct ModeComparison {
  ShellMode mode;
  int analytic_states;
  int fd_states;
  double analytic_lambda;  // lowest analytic eigenvalue, NaN when none
  double fd_lambda;        // lowest negative FD eigenvalue, NaN when none
  double rel_diff;         // largest paired relative difference, NaN when unpaired
  bool match;
};

/// Compares every ShellMode with Richardson-extrapolated FD eigenvalues.
/// The config's h is aligned to the shell radius.
std::vector<ModeComparison> compare_modes_with_fd(double a, double beta, const FdConfig& config,
                                                  double rel_tol = 1e-2);

}  // namespace deltacrit
