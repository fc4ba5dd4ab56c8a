#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetashuffle::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
};

inline constexpr int kDefaultWeightCap = 10;

/// Weight cap for verify and equiv: MZV_MAX_WEIGHT if set to a positive
/// integer, otherwise kDefaultWeightCap.
int weight_cap();

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetashuffle::cli
