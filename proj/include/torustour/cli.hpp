#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torustour::cli {

inline constexpr int exit_solution = 0;
inline constexpr int exit_none = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_format = 65;

/// Runs one subcommand (generate, analyze, solve, search, census, verify,
/// render) against the given streams and returns the process exit code:
/// 0 success/solution, 1 proven-none/no-solution, 2 unknown/inconclusive,
/// 64 usage error, 65 input format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace torustour::cli
