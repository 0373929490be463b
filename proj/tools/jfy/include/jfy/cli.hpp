#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jfy {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 semantic failure (unsupported fact, defect, fuzz mismatch, size caps),
/// 2 usage, input or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jfy
