#pragma once

#include <ostream>

namespace tubealg {

// Entry point of the tubealg command line. Writes one JSON report to `out`
// and human-readable logs to `err`. Returns 0 on success, 1 when a
// verification fails (the report carries witnesses), 2 on input errors.
// TUBEALG_MAX_EXHAUSTIVE sets the default for --max-exhaustive.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tubealg
