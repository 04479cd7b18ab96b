#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpconv::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kResource = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON (or CSV) goes
/// to `out`; diagnostics go to `err` as one line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cpconv::cli
