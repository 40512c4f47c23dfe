#pragma once

#include <ostream>

namespace fracchern {

// Exit codes: 0 ok, 1 parse error, 2 precondition violation, 3 verification mismatch.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracchern
