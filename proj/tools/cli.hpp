#pragma once

#include <iosfwd>

namespace occred::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCertification = 3;
inline constexpr int kBudget = 4;

// Entry point of the `occred` tool with explicit streams, for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace occred::cli
