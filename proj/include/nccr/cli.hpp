#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nccr::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kValidation = 2,
  kInternal = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nccr::cli
