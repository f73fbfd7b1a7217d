#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz {

// Command-line entry point; args excludes the program name. Every command
// prints one JSON run report to `out`; diagnostics go to `err`.
//
// Exit codes, stable across releases:
//   0  success
//   1  a mathematical check failed on the input (identity violations)
//   2  input or usage error (bad file, bad flags, non-central ideal)
//   3  finding: an internally verified invariant failed on a valid input
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace leibniz
