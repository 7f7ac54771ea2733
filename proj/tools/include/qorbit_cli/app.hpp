#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qorbit::cli {

/// Exit codes of the qorbit tool.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kParseError = 2,
  kBoundaryUncertain = 3,
  kVerificationFailed = 4,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qorbit::cli
