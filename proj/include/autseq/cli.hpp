#pragma once

#include <ostream>

namespace autseq {

/// Exit codes: 0 answered, 1 failed internally (synthesis, certification or
/// self-check), 2 bad input, 3 state cap reached.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace autseq
