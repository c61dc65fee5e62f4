#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semihom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
};

/// Runs one invocation; args excludes the program name. Output goes to out
/// unless --out is given, diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semihom::cli
