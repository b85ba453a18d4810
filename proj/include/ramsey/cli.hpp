#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ramsey::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kIndeterminate = 2,
    kParseError = 3,
};

/// Runs one subcommand. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace ramsey::cli
