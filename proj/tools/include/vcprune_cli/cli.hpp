#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcprune::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNotProved = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, reports and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcprune::cli
