#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridcache::cli {

enum ExitCode : int {
  kOk = 0,
  kRuntimeFailure = 1,
  kBadArguments = 2,  // includes unreadable or malformed config files
  kInfeasible = 3,
  kBudgetExceeded = 4,
};

/// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnv = "GRIDCACHE_SEED";

/// Entry point of the `gridcache` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridcache::cli
