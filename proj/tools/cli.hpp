#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperoct::cli {

// Exit statuses: 0 success, 1 failed check or fixture mismatch, 2 bad
// arguments or unreadable input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Data goes to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default location of the bundled table fixtures.
std::string default_fixture(const std::string& type);

}  // namespace hyperoct::cli
