#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieform {

// Command-line front end, exposed as a function so tests can drive it
// in-process. Returns the exit code: 0 when every requested check passes,
// 1 on a verification failure, 2 on an input error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lieform
