#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "covnum/cover.hpp"

namespace covnum {

struct LpStats {
  std::uint64_t rows = 0;
  std::uint64_t columns = 0;
  std::uint64_t nonzeros = 0;

  bool operator==(const LpStats&) const = default;
};

struct LpOptions {
  /// Break term lists before a term that would pass this many characters.
  /// 0 keeps every list on one line.
  std::size_t wrap = 0;
};

/// Writes min sum r_j subject to, for every element, the sum of its sets'
/// variables "> 1" (read as >= by LP-format solvers), all variables binary.
/// Variables are r1..rm in column order; lines end in a bare '\n'.
/// Throws Error when the stream fails.
LpStats write_lp(const CoverInstance& instance, std::ostream& out, const LpOptions& options = {});

/// Stats without writing anything.
LpStats lp_stats(const CoverInstance& instance);

/// Reads "r<j> <value>" lines (a solver .sol file) or bare "r<j>" lines.
/// A variable is chosen when its value rounds to 1. '#' starts a comment.
/// Returns 0-based column indices in ascending order. Throws ParseError on a
/// malformed line and ArgumentError when j is outside 1..columns.
std::vector<std::size_t> read_solution(std::istream& in, std::size_t columns);

}  // namespace covnum
