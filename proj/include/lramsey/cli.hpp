#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitVerification = 3;

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lramsey::cli
