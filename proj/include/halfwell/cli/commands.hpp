#pragma once

#include <ostream>

namespace halfwell::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the halfwell executable. Writes reports to `out` (unless
/// --out redirects them) and diagnostics to `err`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace halfwell::cli
