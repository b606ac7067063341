#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapbal::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDataMismatch = 3,
    kInternal = 4,
};

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapbal::cli
