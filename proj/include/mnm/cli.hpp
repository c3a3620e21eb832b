#pragma once

#include <string>
#include <vector>

namespace mnm {

// Runs one CLI invocation; args excludes the program name. Errors are
// reported as one-line JSON on stderr with a nonzero return.
int run_cli(const std::vector<std::string>& args);

}  // namespace mnm
