#pragma once

// Command-line front end. Writes one JSON document to `out` and diagnostics to
// `err`. Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <ostream>

namespace dunkl {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl
