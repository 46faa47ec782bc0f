#pragma once

#include <ostream>

namespace debell {

/// Entry point behind the `debell` executable. Returns 0 on success, 1 on a
/// computation failure (or, for `verify`, when an asserted claim row is not
/// EQUAL) and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace debell
