#pragma once

#include <iosfwd>

namespace netctrl::cli {

enum ExitCode : int {
    kOk = 0,
    kExpectationUnmet = 1,
    kInputError = 2,
    kTheoremViolation = 3,
};

/// Entry point shared by the netctrl executable and the tests.
///   zfs      --graph FILE (--set 1,3 | --minimum) [--expect zfs|not-zfs] [--dot FILE]
///   analyze  (--graph FILE [--matrix KIND] | --matrix-file FILE) --set 1,3
///            [--report text|json] [--expect ...] [--out FILE] [--dot FILE]
///   verify   --max-order N --kinds K1,K2 --subsets POLICY [--seed S] [--sweep ...] [--out FILE]
///   examples
/// NETCTRL_MAX_ORDER overrides the exact-arithmetic order caps.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netctrl::cli
