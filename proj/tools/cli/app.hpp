#pragma once

#include <ostream>

namespace cvtele::cli {

// Parses the command line, dispatches a subcommand and maps failures to exit
// codes: 0 success, 1 usage, 2 accuracy or tolerance, 3 I/O.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvtele::cli
