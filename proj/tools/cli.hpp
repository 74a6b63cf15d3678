#pragma once

#include <iosfwd>

namespace c14 {

// Exit codes: 0 success, 1 verification failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace c14
