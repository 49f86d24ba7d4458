#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffperm {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
};

/// Runs one CLI invocation. Data (JSON lines or CSV) goes to out,
/// diagnostics to err. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffperm
