#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fishburn::cli {

// Dispatches one command. args excludes the program name. Exit codes: 0 on
// success (and when every verification check passes), 1 on verification
// failure, 2 on usage errors, 3 on malformed input payloads.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fishburn::cli
