#pragma once

#include <iosfwd>

namespace cgauge::cli {

/// Exit codes: 0 all asserted checks pass, 1 numerical failure, 2 usage error.
int run(int argc, const char* const* argv);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cgauge::cli
