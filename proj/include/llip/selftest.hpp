#pragma once

#include <iosfwd>

namespace llip {

/// Built-in regression cases for the worked examples: the discontinuous
/// minimal bound envelope on [0,1] and the extension failure/repair pair on
/// [-1,1], plus the standard operator sanity cases. Prints one PASS/FAIL
/// line per case and returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace llip
