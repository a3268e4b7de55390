#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitInternalMismatch = 3,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor
