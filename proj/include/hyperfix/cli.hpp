#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperfix::cli {

/// Runs one invocation; `args` excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperfix::cli
