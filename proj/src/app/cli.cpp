#include "deltacrit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "deltacrit/critical.hpp"
#include "deltacrit/dispersion1d.hpp"
#include "deltacrit/dispersion2d.hpp"
#include "deltacrit/fdoracle.hpp"
#include "deltacrit/specfun.hpp"
#include "deltacrit/table.hpp"
#include "deltacrit/verify.hpp"

#ifndef DELTACRIT_VERSION
#define DELTACRIT_VERSION "0.0.0"
#endif

namespace deltacrit::cli {

namespace {

using report::Cell;
using report::Table;

// A bad flag value discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "csv";
  bool stamp = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void finish_meta(Table& table, const std::string& command, const Common& common) {
  table.meta["command"] = command;
  table.meta["count"] = table.rows.size();
  table.meta["version"] = version();
  if (common.stamp) table.meta["timestamp"] = utc_timestamp();
}

Cell num(double v) { return std::isfinite(v) ? Cell{v} : Cell{}; }
Cell integer(std::size_t v) { return Cell{static_cast<std::int64_t>(v)}; }

std::vector<double> grid(double lo, double hi, int points, bool log_spaced) {
  if (points < 1) throw UsageError("--points must be >= 1");
  if (!(lo <= hi)) throw UsageError("--a-min must not exceed --a-max");
  if (points == 1) {
    if (lo != hi) throw UsageError("--points 1 needs --a-min == --a-max");
    return {lo};
  }
  if (log_spaced && !(lo > 0.0)) throw UsageError("--log needs a positive lower end");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    out[static_cast<std::size_t>(i)] = log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

// ---- solve ----

struct SolveArgs {
  int dim = 1;
  std::string bc = "dirichlet";
  double sigma = 1.0;
  double a = 0.0;
  double beta = 0.0;
  std::string mode = "modified";
};

int cmd_solve(const SolveArgs& args, bool bc_given, const Common& common, std::ostream& out, std::ostream& err) {
  std::vector<BoundState> states;
  Table table;
  table.columns = {"k", "lambda", "dispersion_residual", "jump_residual"};
  table.meta["dim"] = args.dim;
  if (args.dim == 1) {
    const Problem1D p{args.a, args.beta, {parse_boundary(args.bc), args.sigma}};
    table.meta["bc"] = args.bc;
    if (p.bc.kind == BoundaryKind::Robin) table.meta["sigma"] = args.sigma;
    states = solve_bound_states(p);
  } else {
    if (bc_given) err << "warning: --bc is ignored for --dim 2 (Dirichlet at r = 1)\n";
    const Problem2D p{args.a, args.beta, parse_shell_mode(args.mode)};
    table.meta["mode"] = args.mode;
    states = solve_bound_states_2d(p);
  }
  table.meta["a"] = args.a;
  table.meta["beta"] = args.beta;
  bool converged = true;
  for (const BoundState& s : states) {
    table.add_row({s.k, s.lambda, s.dispersion_residual, s.jump_residual});
    converged = converged && s.converged;
  }
  finish_meta(table, "solve", common);
  report::write(table, report::parse_format(common.format), out);
  if (!converged) {
    err << "error: root refinement did not converge\n";
    return kNumerical;
  }
  return kOk;
}

// ---- betacr ----

struct BetacrArgs {
  int dim = 1;
  std::string bc = "dirichlet";
  double sigma = 1.0;
  double a_min = 0.0;
  double a_max = 0.0;
  int points = 1;
  bool log_spaced = false;
  double tol = 1e-10;
  std::string mode = "modified";
};

int cmd_betacr(const BetacrArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
  if (!(args.tol > 0.0)) throw UsageError("--tol must be > 0");
  if (!(args.a_min > 0.0)) throw UsageError("--a-min must be > 0");
  const auto a_values = grid(args.a_min, args.a_max, args.points, args.log_spaced);
  Family family;
  family.dim = args.dim;
  family.bc = {parse_boundary(args.bc), args.sigma};
  family.mode = parse_shell_mode(args.mode);
  family.tol = args.tol;

  Table table;
  table.columns = {"a", "beta_cr", "method", "check", "bracket_only", "error"};
  table.meta["dim"] = args.dim;
  if (args.dim == 1) table.meta["bc"] = args.bc;
  else table.meta["mode"] = args.mode;
  table.meta["a_min"] = args.a_min;
  table.meta["a_max"] = args.a_max;
  table.meta["points"] = args.points;
  table.meta["log"] = args.log_spaced;
  table.meta["tol"] = args.tol;
  bool failed = false;
  for (const SweepRow& row : beta_cr_sweep(a_values, family)) {
    table.add_row({row.a, num(row.beta_cr), to_string(row.method), num(row.check), row.bracket_only,
                   row.error.empty() ? Cell{} : Cell{row.error}});
    if (!row.error.empty()) {
      failed = true;
      err << "error: a = " << report::format_number(row.a) << ": " << row.error << '\n';
    }
  }
  finish_meta(table, "betacr", common);
  report::write(table, report::parse_format(common.format), out);
  return failed ? kNumerical : kOk;
}

// ---- gplot ----

struct GplotArgs {
  double a = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  int points = 0;
  std::string mode = "paper";
};

int cmd_gplot(const GplotArgs& args, const Common& common, std::ostream& out) {
  if (!(args.a > 0.0)) throw UsageError("--a must be > 0");
  if (!(args.k_min > 0.0) || !(args.k_max >= args.k_min)) throw UsageError("need 0 < --k-min <= --k-max");
  const InteriorBasis basis = interior_basis(parse_shell_mode(args.mode));
  const auto curve = g_curve(args.a, args.k_min, args.k_max, args.points, basis);
  Table table;
  table.columns = {"k", "g", "pole_flag"};
  std::size_t poles = 0;
  for (const GSample& s : curve) {
    table.add_row({s.k, num(s.g), s.pole_flag});
    poles += s.pole_flag ? 1 : 0;
  }
  table.meta["a"] = args.a;
  table.meta["k_min"] = args.k_min;
  table.meta["k_max"] = args.k_max;
  table.meta["points"] = args.points;
  table.meta["mode"] = args.mode;
  table.meta["pole_count"] = poles;
  table.meta["near_minus_one_band"] = 0.15;
  table.meta["near_minus_one_fraction"] = near_minus_one_fraction(curve);
  finish_meta(table, "gplot", common);
  report::write(table, report::parse_format(common.format), out);
  return kOk;
}

// ---- oracle ----

struct OracleArgs {
  int dim = 1;
  std::string bc = "dirichlet";
  double sigma = 1.0;
  double a = 0.0;
  double beta = 0.0;
  double h = 0.0;
  double extent = 0.0;
  int count = 1;
  double well_width = 0.0;
  bool richardson = false;
};

int cmd_oracle(const OracleArgs& args, bool well_given, const Common& common, std::ostream& out) {
  FdConfig config{args.h, args.extent};
  if (well_given) {
    config.delta = DeltaHandling::NarrowWell;
    config.well_width = args.well_width;
  }
  Table table;
  table.meta["dim"] = args.dim;
  table.meta["a"] = args.a;
  table.meta["beta"] = args.beta;
  table.meta["h"] = args.h;
  table.meta["extent"] = args.extent;
  table.meta["delta"] = well_given ? "narrow-well" : "on-node";
  if (well_given) table.meta["well_width"] = args.well_width;

  if (args.dim == 1) {
    const Problem1D p{args.a, args.beta, {parse_boundary(args.bc), args.sigma}};
    p.validate();
    if (!well_given && args.beta != 0.0) config = align_to_node(config, 0.0, args.a);
    table.meta["bc"] = args.bc;
    table.meta["h_effective"] = config.h;
    if (args.richardson) {
      table.columns = {"index", "lambda_h", "lambda_h2", "lambda_extrapolated"};
      const auto eigs = fd_halfline_richardson(p, config, args.count);
      for (std::size_t i = 0; i < eigs.size(); ++i) {
        table.add_row({integer(i), eigs[i].coarse, eigs[i].fine, eigs[i].value});
      }
    } else {
      table.columns = {"index", "lambda"};
      const auto eigs = fd_halfline_spectrum(p, config, args.count);
      for (std::size_t i = 0; i < eigs.size(); ++i) table.add_row({integer(i), eigs[i]});
    }
  } else {
    // The radial oracle is always compared after Richardson extrapolation.
    Problem2D{args.a, args.beta, ShellMode::Modified}.validate();
    const auto cmp = compare_modes_with_fd(args.a, args.beta, config);
    table.meta["h_effective"] = align_to_node(config, 1.0, 1.0 + args.a).h;
    table.columns = {"mode", "analytic_states", "fd_states", "analytic_lambda", "fd_lambda", "rel_diff", "match"};
    std::vector<std::string> matching;
    for (const ModeComparison& c : cmp) {
      table.add_row({to_string(c.mode), integer(static_cast<std::size_t>(c.analytic_states)),
                     integer(static_cast<std::size_t>(c.fd_states)), num(c.analytic_lambda), num(c.fd_lambda),
                     num(c.rel_diff), c.match});
      if (c.match) matching.push_back(to_string(c.mode));
    }
    table.meta["matching_modes"] = matching;
  }
  finish_meta(table, "oracle", common);
  report::write(table, report::parse_format(common.format), out);
  return kOk;
}

// ---- verify ----

int cmd_verify(const std::string& suite, double tol_scale, std::ostream& out, std::ostream& err) {
  const verify::Options options{tol_scale};
  const auto results = verify::run_suite(suite, options);
  verify::write_report(results, err);
  const auto doc = verify::summary_json(suite, options, results);
  out << doc.dump(2) << '\n';
  return doc["passed"].get<bool>() ? kOk : kVerifyFailed;
}

// ---- bessel ----

int cmd_bessel(const std::string& kind_name, const std::vector<double>& xs, const Common& common,
               std::ostream& out) {
  const specfun::BesselKind kind = specfun::parse_kind(kind_name);
  Table table;
  table.columns = {"x", "value"};
  for (double x : xs) {
    try {
      table.add_row({x, specfun::bessel_eval(kind, x)});
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  table.meta["kind"] = specfun::to_string(kind);
  finish_meta(table, "bessel", common);
  report::write(table, report::parse_format(common.format), out);
  return kOk;
}

}  // namespace

std::string version() { return DELTACRIT_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states and critical couplings for delta-function potentials", "deltacrit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", version());

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--stamp", common.stamp, "Add a UTC timestamp to the output metadata");

  const auto bc_check = CLI::IsMember({"dirichlet", "neumann", "robin"});
  const auto mode_check = CLI::IsMember({"paper", "paper-eq13", "modified"});
  const auto dim_check = CLI::IsMember({1, 2});

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Bound states of one problem");
  solve_cmd->add_option("--dim", solve.dim, "1 (half-line) or 2 (exterior of the unit disk)")->required()->check(dim_check);
  auto* solve_bc = solve_cmd->add_option("--bc", solve.bc, "Boundary condition at the origin (1D)")->check(bc_check);
  solve_cmd->add_option("--sigma", solve.sigma, "Robin parameter in y'(0) + sigma y(0) = 0");
  solve_cmd->add_option("--a", solve.a, "Delta position (1D) or shell offset, shell at r = 1 + a (2D)")->required();
  solve_cmd->add_option("--beta", solve.beta, "Coupling constant")->required();
  solve_cmd->add_option("--mode", solve.mode, "Shell secular equation (2D)")->check(mode_check);

  BetacrArgs betacr;
  auto* betacr_cmd = app.add_subcommand("betacr", "Critical coupling over a range of a");
  betacr_cmd->add_option("--dim", betacr.dim, "1 or 2")->required()->check(dim_check);
  betacr_cmd->add_option("--bc", betacr.bc, "Boundary condition (1D)")->check(bc_check);
  betacr_cmd->add_option("--sigma", betacr.sigma, "Robin parameter");
  betacr_cmd->add_option("--a-min", betacr.a_min, "Smallest a")->required();
  betacr_cmd->add_option("--a-max", betacr.a_max, "Largest a")->required();
  betacr_cmd->add_option("--points", betacr.points, "Number of a values")->required();
  betacr_cmd->add_flag("--log", betacr.log_spaced, "Log-spaced a values");
  betacr_cmd->add_option("--tol", betacr.tol, "Bisection bracket width");
  betacr_cmd->add_option("--mode", betacr.mode, "Shell secular equation (2D)")->check(mode_check);

  GplotArgs gplot;
  auto* gplot_cmd = app.add_subcommand("gplot", "Samples of g(k, a) for plotting");
  gplot_cmd->add_option("--a", gplot.a, "Shell offset")->required();
  gplot_cmd->add_option("--k-min", gplot.k_min, "Smallest k")->required();
  gplot_cmd->add_option("--k-max", gplot.k_max, "Largest k")->required();
  gplot_cmd->add_option("--points", gplot.points, "Number of samples")->required();
  gplot_cmd->add_option("--mode", gplot.mode, "Interior basis")->check(CLI::IsMember({"paper", "modified"}));

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Finite-difference eigenvalues");
  oracle_cmd->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  oracle_cmd->add_option("--dim", oracle.dim, "1 or 2")->required()->check(dim_check);
  oracle_cmd->add_option("--bc", oracle.bc, "Boundary condition (1D)")->check(bc_check);
  oracle_cmd->add_option("--sigma", oracle.sigma, "Robin parameter");
  oracle_cmd->add_option("--a", oracle.a, "Delta position or shell offset")->required();
  oracle_cmd->add_option("--beta", oracle.beta, "Coupling constant")->required();
  oracle_cmd->add_option("--h", oracle.h, "Grid step (adjusted to put the delta on a node)")->required();
  oracle_cmd->add_option("--extent", oracle.extent, "Truncation length (1D) or outer radius (2D)")->required();
  oracle_cmd->add_option("--count", oracle.count, "Number of eigenvalues (1D)");
  auto* well_opt = oracle_cmd->add_option("--well-width", oracle.well_width, "Replace the delta by a well of this width");
  oracle_cmd->add_flag("--richardson", oracle.richardson, "Also run h/2 and extrapolate (1D)");

  std::string suite = "all";
  double tol_scale = 1.0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-verification checks");
  verify_cmd->add_option("--suite", suite, "Check group")
      ->check(CLI::IsMember({"specfun", "1d", "2d", "oracle", "all"}));
  verify_cmd->add_option("--tol-scale", tol_scale, "Multiply every tolerance")->check(CLI::PositiveNumber);

  std::string kind = "K0";
  std::vector<double> xs;
  auto* bessel_cmd = app.add_subcommand("bessel", "Evaluate a Bessel function");
  bessel_cmd->add_option("--kind", kind, "J0 J1 Y0 Y1 I0 I1 K0 K1")->required();
  bessel_cmd->add_option("--x", xs, "Arguments")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, solve_bc->count() > 0, common, out, err);
    if (betacr_cmd->parsed()) return cmd_betacr(betacr, common, out, err);
    if (gplot_cmd->parsed()) return cmd_gplot(gplot, common, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, well_opt->count() > 0, common, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, tol_scale, out, err);
    if (bessel_cmd->parsed()) return cmd_bessel(kind, xs, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace deltacrit::cli
