#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace almostchar {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidInput = 2,
  kExitResourceGuard = 3,
};

/// Runs one command line (without the program name), writing the document to
/// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace almostchar
