#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lmdi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `args` (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lmdi::cli
