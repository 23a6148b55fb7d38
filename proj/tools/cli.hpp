#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace airtime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs the `airtime` command line (arguments without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace airtime::cli
