#pragma once

#include <iosfwd>
#include <span>

namespace sliplab {

// Full command-line driver, callable in-process.  `args` is the complete
// argument vector including the program name.  Reports go to `out` (or the
// file named by -o); diagnostics and wall times go to `err`, which keeps the
// report streams byte-identical across runs.
//
// Exit codes: 0  property holds / command succeeded
//             1  property fails (a witness or obstruction is emitted)
//             2  usage, parse, or validation error
//             3  enumeration cap exceeded
int cli_main(std::span<const char* const> args, std::ostream& out, std::ostream& err);

}  // namespace sliplab
