#pragma once

#include <exception>
#include <iosfwd>

namespace structkit {

// Exit codes: 0 success, 1 internal error, 2 input error (parse, shape,
// domain, class, size), 3 infeasible block count, 4 not applicable.
int exit_code_for(const std::exception& e);

// Entry point of the structkit command; "-" as a file name reads `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace structkit
