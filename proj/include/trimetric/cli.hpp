#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimetric {

// Whole command-line front end behind a testable seam: args are argv[1..],
// `in` backs the "-" input path, `out` receives successful output, `err`
// the diagnostics.  Returns the process exit code: 0 on success, 1 on
// domain errors (axiom violations, size bounds, mismatched bases, ...),
// 2 on I/O, syntax and usage errors.  Nothing is written to `out` or the
// --output file on failure.
int run_command(std::vector<std::string> args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace trimetric
