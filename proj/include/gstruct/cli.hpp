#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gstruct {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Runs one command line (without the program name). Reports go to out, diagnostics to err.
/// color enables ANSI PASS/FAIL markers in text reports.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool color = false);

}  // namespace gstruct
