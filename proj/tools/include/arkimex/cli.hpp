#pragma once

#include <ostream>

namespace arkimex {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitMismatch = 3,
  kExitNumerical = 4,
  kExitIo = 5,
};

/// Entry point of the `arkimex` tool; writes messages to `out`/`err` and
/// report files under the output directory.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace arkimex
