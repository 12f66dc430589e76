#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uncond::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kInconsistent = 4,
};

/// Runs one command. args excludes the program name. Results go to `out`
/// (or the --out file); errors go to `err` as {"error", "detail"} JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uncond::cli
