#pragma once

#include "pellkit/stormer.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pellkit::cli {

/// Parses argv, dispatches to exactly one library operation and writes
/// the result document to `out` (diagnostics to `err`). Exit codes:
/// 0 success, 1 domain error, 2 usage error. All integers are rendered
/// in full decimal; repeated invocations with identical flags produce
/// byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic serialization of a verification report, json or
/// fixed-width table mode.
std::string emit_report(const VerificationReport& report, bool json_mode);

}  // namespace pellkit::cli
