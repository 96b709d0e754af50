#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lando::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

// Runs the command line `args` (args[0] is the program name). Results go to
// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lando::cli
