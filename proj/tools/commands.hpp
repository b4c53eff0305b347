#pragma once

#include <iosfwd>

namespace kalmanson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line and returns the process exit code: 0 when the
/// answer is yes, 1 when the mathematics says no (or a cross-check
/// disagrees), 2 when the input or the flags are unusable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kalmanson::cli
