#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wibsp {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // infeasible request or verification failure
  kExitUsage = 2,
  kExitBudget = 3,  // budget exhausted; best-effort output was still written
};

/// Entry point of the `wibsp` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wibsp
