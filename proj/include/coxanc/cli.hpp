#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxanc {

// Exit codes of the coxanc tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
};

// args excludes the program name. Reports go to `out` (or --out), diagnostics
// to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxanc
