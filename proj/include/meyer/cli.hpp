#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meyer {

// Full command-line surface, callable in-process for tests. `args` is
// argv without the program name. Returns the exit code: 0 success / all
// checks pass, 1 a verification check failed, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace meyer
