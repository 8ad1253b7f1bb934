#pragma once

#include <iosfwd>

namespace sl2::cli {

// Exit codes: 0 success, 1 round-trip mismatch, 2 invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl2::cli
