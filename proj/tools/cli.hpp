#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reticular::cli {

// args excludes the program name. Exit codes: 0 success, 1 usage error,
// 2 domain or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reticular::cli
