#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace echoes::cli {

// Exit codes: 0 success, 1 a check failed, 2 usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace echoes::cli
