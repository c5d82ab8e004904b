#pragma once

#include <ostream>

namespace schubert {

// Runs the invariant checks of every module on S_3 and S_4, printing one
// "PASS name" / "FAIL name" line each. True iff every check passes.
bool run_selftest(std::ostream& out);

} // namespace schubert
