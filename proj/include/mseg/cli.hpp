#pragma once

#include <ostream>

namespace mseg {

/// Command-line entry point. Returns the process exit status: 0 on success,
/// the numeric ErrorCode on a library error, 64 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mseg
