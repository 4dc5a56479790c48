#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace popstack::cli {

// Exit codes: 0 success, 1 a verify run found a counterexample (or an
// internal theorem check fired), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace popstack::cli
