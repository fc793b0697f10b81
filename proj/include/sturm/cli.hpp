#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sturm::cli {

enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kDegenerate = 2,
  kUsage = 3,
};

// Runs the command line `args` (args[0] is the program name). Output goes to
// `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturm::cli
