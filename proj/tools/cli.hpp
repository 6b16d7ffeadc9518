#ifndef COOPCOLOR_TOOLS_CLI_HPP
#define COOPCOLOR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coopcolor::cli {

// Exit codes: a negative result (UNSAT, invalid coloring, uncovered sample)
// is reported, not treated as a failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coopcolor::cli

#endif  // COOPCOLOR_TOOLS_CLI_HPP
