#pragma once

#include <iosfwd>

namespace gaars::cli {

enum ExitCode : int {
  ok = 0,
  rejected = 1,
  malformed = 2,
  key_relation = 3,
};

/// Runs `arsctl` with the given arguments. Data goes to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaars::cli
