#pragma once

#include <ostream>

namespace sdbetti::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage error or a size
/// gate was exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdbetti::cli
