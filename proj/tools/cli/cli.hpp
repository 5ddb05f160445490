#pragma once

#include <iosfwd>

namespace cospec::cli {

struct IoStreams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Exit codes: 0 success or all cospectral, 1 a verdict came out different,
/// 2 input error, 3 precondition or size guard.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDifferent = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

int run(int argc, const char* const* argv, IoStreams io);

}  // namespace cospec::cli
