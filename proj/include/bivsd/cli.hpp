#pragma once

#include <iosfwd>

namespace bivsd {

// Full command-line front end. Reports go to `out`, diagnostics to `err`.
// The exit code conveys execution success only; test decisions live in the
// report.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace bivsd
