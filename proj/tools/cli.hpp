// The `macroq` command line. Kept in a library so tests can drive it
// in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macroq::cli {

/// Exit codes: 0 success, 1 a check or invariant failed, 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macroq::cli
