#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pforest {

// Runs one CLI invocation. `args` excludes the program name. All output goes
// to the given streams, which keeps command output byte-reproducible and
// testable in-process.
//
// Exit codes: 0 success, 1 verification failure (or theorem-check failures),
// 2 precondition failure (odd component, enumeration cap), 64 usage,
// 65 unreadable or malformed input, 70 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pforest
