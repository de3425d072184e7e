#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncnodal {

/// Runs one CLI invocation (args excludes the program name). Exit codes:
/// 0 success, 1 domain validation failure, 2 parse error, 64 usage error.
/// All success output is byte-deterministic for a given input.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ncnodal
