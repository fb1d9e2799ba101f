#pragma once

// Self-verification checks grouped into suites.  Results are deterministic:
// random draws use fixed seeds and no timing enters the JSON summary.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace deltacrit::verify {

struct Options {
  /// Multiplies every numeric tolerance; strict inequalities are unaffected.
  double tol_scale = 1.0;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string summary;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

using CheckFn = CheckResult (*)(const Options&);

struct Check {
  std::string id;
  std::string suite;  // specfun | 1d | 2d | oracle
  CheckFn run;
};

/// Every check in reporting order.
const std::vector<Check>& registry();
const Check& find_check(const std::string& id);

/// "specfun" | "1d" | "2d" | "oracle" | "all"; throws std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& options);

nlohmann::ordered_json summary_json(const std::string& suite, const Options& options,
                                    const std::vector<CheckResult>& results);
void write_report(const std::vector<CheckResult>& results, std::ostream& out);

// Individual checks.
CheckResult check_dirichlet_threshold(const Options& options);
CheckResult check_blowup_limit(const Options& options);
CheckResult check_neumann_zero_threshold(const Options& options);
CheckResult check_robin_zero_threshold(const Options& options);
CheckResult check_eigenvalue_bounds(const Options& options);
CheckResult check_reduced_form(const Options& options);
CheckResult check_fd_agreement_1d(const Options& options);
CheckResult check_narrow_well(const Options& options);
CheckResult check_special_functions(const Options& options);
CheckResult check_reference_values(const Options& options);
CheckResult check_shell_window(const Options& options);
CheckResult check_g_curves(const Options& options);
CheckResult check_modified_threshold(const Options& options);
CheckResult check_arbitration_2d(const Options& options);
CheckResult check_modified_fd_crosscheck(const Options& options);

}  // namespace deltacrit::verify
