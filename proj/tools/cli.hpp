#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csa_embed::cli {

enum ExitCode : int {
    exit_ok = 0,        // success, embeds, principle holds
    exit_failure = 1,   // obstructed, principle fails, selfcheck violation
    exit_invalid = 2,   // usage or validation error
};

/// Runs one invocation.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csa_embed::cli
