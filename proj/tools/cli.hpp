#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdent::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidState = 2,
  kNumerical = 3,
};

// Runs one invocation. args excludes the program name. Results go to out,
// diagnostics to err; nothing is written to the process streams directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdent::cli
