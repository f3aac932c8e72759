#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomfield::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_not_integrable = 3;
inline constexpr int exit_io_error = 4;

/// Runs one command line (args excludes the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atomfield::cli
