// Command-line front end. Exit codes: 0 affirmative, 1 negative verdict or
// rejected rewrite, 2 usage, parse or validation error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mel::cli {

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mel::cli
