#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. `in` backs the `-`
// input path.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace fixset::cli
