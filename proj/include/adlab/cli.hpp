#pragma once

// Command-line front end. Verbs: validate, ado, adpt, ads, sobrify, check,
// sweep, render.

#include <ostream>
#include <string>
#include <vector>

namespace adlab {

/// Exit statuses: 0 on success or passing checks, 1 on a failing check or an
/// exhausted budget, 2 on usage or input errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name) and runs one verb. Artifacts go
/// to `out` unless --out names a file; diagnoses go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adlab
