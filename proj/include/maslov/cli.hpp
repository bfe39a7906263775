#pragma once

#include <iosfwd>

namespace maslov::cli {

/// Exit codes: 0 success, 1 input or usage error, 2 identity violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maslov::cli
