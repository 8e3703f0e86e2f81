#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parsign::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
};

/// Runs one `parsign` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parsign::cli
