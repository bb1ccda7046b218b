#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace ramify {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitPass = 0,
    kExitVerifierFailure = 1,
    kExitInvalidInput = 2,
    kExitInsufficientPrecision = 3,
};

// Library errors map to kExitInvalidInput except InsufficientPrecision;
// anything else is an internal failure and maps to kExitVerifierFailure.
int exit_code_for(const std::exception &e);

// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ramify
