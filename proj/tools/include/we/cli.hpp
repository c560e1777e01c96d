#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace we {

// Runs one wentropy invocation; args exclude the program name. Returns the
// exit code: 0 success, 1 failed verification, 2 usage or parameter error,
// 3 layout bound exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace we
