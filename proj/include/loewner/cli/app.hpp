#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loewner::cli {

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 usage error, 2 validation or parse error, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loewner::cli
