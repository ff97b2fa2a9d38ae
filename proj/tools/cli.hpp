#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int {
  kVerified = 0,
  kNontrivial = 1,
  kUsage = 2,
  kInconclusive = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
