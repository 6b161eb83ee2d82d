#pragma once

#include <ostream>

namespace hyperchrom {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailure = 1,
  kExitInputError = 2,
  kExitBudget = 3,
  kExitGeneratorFailure = 4,
};

/// Entry point of the `hyperchrom` tool; subcommands chromatic, delta-cycles,
/// nb, list-count, plk, verify and gen. Normal output goes to `out` unless
/// --out names a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperchrom
