#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace potgraphic::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
    Ok = 0,
    CounterexampleFound = 1,
    UsageError = 2,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace potgraphic::cli
