#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace howe::cli {

// Exit codes: verdicts of any kind are data and exit 0.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kInvariantFailure = 3;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace howe::cli
