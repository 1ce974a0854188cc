#pragma once

// Subcommand parsing and dispatch for the dddp executable.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 incomplete complex search.

#include <ostream>
#include <string>
#include <vector>

namespace dddp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitArguments = 2;
inline constexpr int kExitIncomplete = 3;

/// Runs one command line. args excludes the program name. Table output goes to
/// out unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dddp::cli
