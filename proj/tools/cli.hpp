#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissoc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kGuard = 2,
  kViolation = 3,  // a counterexample to a proven statement was found
};

/// Entry point of the `dissoc` tool. Structured results go to `out`;
/// timings and diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dissoc::cli
