#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewcode {

/// Runs one command-line invocation against the library.
///
/// `args` holds the tokens after the program name. The finished report is
/// written to `out` (or to the file named by --out); structured error JSON
/// goes to `err`. Nothing is written until the run has fully succeeded, so
/// failed runs never leave partial reports.
///
/// Returns 0 on success, 1 on a verification failure (divisibility or
/// certificate violations, exceeded work budgets, failed benchmark rows,
/// constructions that are not dual-containing), and 2 on a usage error
/// (unknown flags, malformed polynomials or specs, unwritable --out paths).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewcode
