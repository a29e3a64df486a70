#pragma once

#include <ostream>

namespace hypchrom {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitOk = 0, kExitInvalidArguments = 2, kExitNumericFailure = 3 };

/// Runs the `hypchrom` command line (subcommands bound, sweep, limit,
/// spindle, check) writing normal output to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypchrom
