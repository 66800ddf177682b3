#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minbound {

// Full command-line driver, side-effect free up to the given streams so
// tests can run it in-process. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 usage error, 2 bad input or exhausted
// budget.
int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace minbound
