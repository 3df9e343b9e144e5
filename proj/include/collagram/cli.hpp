#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace collagram::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;    // parse/validation failures
inline constexpr int kExitMismatch = 3;   // verify found differing reports
inline constexpr int kExitBudget = 4;     // expansion budget or overflow

// Runs one subcommand (args[0] is the subcommand name, the rest its flags)
// and returns the process exit code. All output goes to the given streams,
// which makes the CLI testable in-process; the real main() passes
// std::cout/std::cerr.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace collagram::cli
