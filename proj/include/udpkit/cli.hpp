#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace udpkit::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,
  kFails = 1,
  kUsage = 2,
  kUndecided = 3,
  kDiscrepancy = 4,
};

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udpkit::cli
