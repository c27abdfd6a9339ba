#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace superhopf::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superhopf::cli
