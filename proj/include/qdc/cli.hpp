#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdc::cli {

// Exit codes: 0 ok, 1 input error, 2 validation failure, 3 verify-suite
// failure. Failures end with a final line "ERROR: <code> <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdc::cli
