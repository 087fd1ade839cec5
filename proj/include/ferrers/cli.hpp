#pragma once
// Command-line surface.  Machine-readable output is JSON Lines on --out
// (default stdout); human summaries go to stderr.  Exit codes: 0 clean run,
// 1 usage error, 2 malformed input, 3 run succeeded but found Bad/Violated.

#include <iosfwd>
#include <string>
#include <vector>

namespace ferrers::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitFindings = 3;

int run(const std::vector<std::string>& args, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ferrers::cli
