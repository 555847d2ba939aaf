#pragma once

#include <iosfwd>

namespace collin {

/// Entry point behind the collin-diag executable. Exit codes: 0 ok, 1 problematic collinearity
/// found with --fail-on-problematic, 2 usage or data error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace collin
