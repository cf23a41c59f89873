#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mteg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 1;
inline constexpr int exit_numerical = 2;

/// Runs one invocation. `args` excludes the program name. The JSON run report
/// goes to `out` (or to --report PATH); diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mteg::cli
