#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setpair::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kGuardExceeded = 3,
};

// Runs one command line (without the program name). Machine-readable
// output (JSON or CSV) goes to out, human-readable notes to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setpair::cli
