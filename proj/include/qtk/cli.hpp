#pragma once

#include <iosfwd>

namespace qtk {

/// The qtk command line. Exit codes: 0 success, 1 usage or parse error (or a failed
/// verify run), 2 unsupported shape.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qtk
