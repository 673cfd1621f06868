#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsi::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBadInput = 3,
  kUncorrectable = 4,
};

/// Runs one `rsi` invocation. `args` excludes the program name. The streams
/// stand in for stdin/stdout/stderr whenever a path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rsi::cli
