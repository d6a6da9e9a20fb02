#pragma once

#include <ostream>

namespace shapes::cli {

/// Runs the `shapes` command line. Returns the process exit code:
/// 0 ok, 1 usage, 2 malformed input, 3 non-convex shape, 4 invalid coefficients.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shapes::cli
