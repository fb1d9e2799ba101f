#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltacrit::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

/// Runs one command line (without the program name).  Data goes to `out`,
/// diagnostics and the human-readable verify report to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace deltacrit::cli
