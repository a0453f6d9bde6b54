#pragma once

// Command-line front end.  run_cli is the whole program behind the k0cat
// binary, factored over streams so invocations can run in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace k0cat::cli {

// Parses and executes one invocation; args exclude the program name.
// Exit codes: 0 success, 1 reproduction mismatch in verify-paper,
// 2 invalid arguments or input, 3 well-formed input whose computation
// falls outside the supported model scope.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace k0cat::cli
