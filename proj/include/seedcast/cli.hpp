#pragma once

#include <iosfwd>

namespace seedcast {

// Batch front end. Writes machine-readable JSON (and CSV for sweeps) to out.
// Exit codes: 0 success, 1 verification failure or usage error, 2 validation
// error, 3 cap exceeded.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seedcast
