#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistforge::cli {

// Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace twistforge::cli
