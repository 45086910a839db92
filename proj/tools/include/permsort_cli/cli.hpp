#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace permsort::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInput = 2,
  kExitScaleLimit = 3,
};

/// Settings shared by every subcommand after flag parsing.
struct RunConfig {
  std::string subcommand;
  std::string op_text;
  std::string perm_text;
  std::string kind = "tin";
  std::string format;  // empty = the subcommand's default
  int n = 0;
  int bound = 8;
  int order = -1;      // -1 = subcommand default
  unsigned jobs = 0;   // 0 = all cores
  std::uint64_t budget = 0;
  bool check = false;
};

/// Budget used when --budget is absent: PERMSORT_NODE_BUDGET if set and
/// valid, else the library default.
std::uint64_t default_budget();

/// Runs the tool on `args` (without the program name). Never throws; the
/// return value follows ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permsort::cli
