#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "colorfact/arith.hpp"

namespace colorfact::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

/// Entry point behind the `colorfact` executable.
/// Subcommands: compute, table, enumerate, verify, asymptotic.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

using Term = std::pair<std::uint64_t, BigCount>;

/// b-file lines are exactly "n a(n)", n ascending from 1.
void write_bfile(std::ostream& out, const std::vector<Term>& terms);
/// Parses a b-file; blank lines and lines starting with '#' are skipped.
std::vector<Term> parse_bfile(std::istream& in);

/// Enumeration guard, raised by the COLORFACT_GUARD environment variable.
std::uint64_t enumeration_guard();

}  // namespace colorfact::cli
