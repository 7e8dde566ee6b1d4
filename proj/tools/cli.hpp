#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cqm::cli {

// Exit codes: 0 success, 1 a verification check failed, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool with argv-style arguments (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cqm::cli
