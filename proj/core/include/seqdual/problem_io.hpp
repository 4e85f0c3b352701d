#ifndef SEQDUAL_PROBLEM_IO_HPP
#define SEQDUAL_PROBLEM_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "seqdual/duality.hpp"
#include "seqdual/ec_seq.hpp"

namespace seqdual {

/// A parsed problem file: the ambient space (currently always l1), the
/// constraint functionals defining S as their common kernel, and the point
/// y (finite support, tail 0).
struct ProblemFile {
  SpaceTag space = SpaceTag::L1;
  std::vector<EcSeq> constraints;
  EcSeq point;

  SubspaceKernel subspace() const { return SubspaceKernel(constraints); }
};

/// Line-based problem grammar; `#` starts a comment, blank lines are
/// ignored:
///
///   space l1
///   constraint [r0, r1, ... | tail]
///   point [r0, r1, ... | 0]
///
/// Exactly one `space` line and one `point` line; any number of
/// `constraint` lines. Sequence literals use rationals in `[-]p[/q]`
/// syntax; an empty prefix is written `[| tail]`. Throws ParseError with
/// the offending line number on unknown keywords, malformed literals, a
/// nonzero point tail, or missing sections.
ProblemFile parse_problem(std::string_view text);

enum class ReportFormat { Text, Machine };

/// Machine format is one key=value per line with exact num/den rationals
/// and sequence literals that re-parse to identical values; the key set is
/// stable (documented in the README). Text format is for humans.
std::string render_report(const DualityReport& report, ReportFormat format);

}  // namespace seqdual

#endif
