#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symdiff::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_verification_failed = 3;

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symdiff::cli
