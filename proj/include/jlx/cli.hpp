#pragma once

#include <iosfwd>

namespace jlx::cli {

// Dispatches one command line (without the program name in argv[0] slot is
// fine; CLI11 receives argv as given). Exit codes: 0 success, 2 usage or
// parse error, 3 domain error, 4 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jlx::cli
