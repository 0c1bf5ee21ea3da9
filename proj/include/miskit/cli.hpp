#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace miskit::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failure = 1,
    exit_usage = 2,
    exit_capacity = 3,
};

/// Runs the toolkit CLI against explicit streams; `args` excludes argv[0].
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace miskit::cli
