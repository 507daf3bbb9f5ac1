#pragma once

#include <ostream>

namespace qwalk::app {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidConfig = 2,
  kExitNumerical = 3,
  kExitIo = 4,
};

/// Parses argv and runs one subcommand (simulate, spectrum, limitdist, verify).
/// Diagnostics go to `err` as a single line.
int run_cli(int argc, const char* const* argv, std::ostream& err);

}  // namespace qwalk::app
