#ifndef SEQDUAL_DUALITY_HPP
#define SEQDUAL_DUALITY_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "seqdual/ec_seq.hpp"
#include "seqdual/rational.hpp"
#include "seqdual/span.hpp"

namespace seqdual {

/// Window schedule for the primal witness search. Zero fields are replaced
/// by the defaults: start = coordinate classes + support(y) + constraint
/// count, max = 64 * start. The search doubles the window from start up to
/// max until the window LP value meets the dual value.
struct WindowPolicy {
  std::size_t start = 0;
  std::size_t max = 0;
};

/// Everything the duality analysis of one (y, S) instance produces.
///
/// primal_value is the exact minimum distance min_{x in S} ||y - x||_1 (it
/// always equals dual_value); primal_witness attains it only when
/// primal_certified is set. predual_value is the supremum over the unit
/// ball of the pre-annihilator; gap = primal_value - predual_value is the
/// certified duality gap, nonnegative, and zero whenever the restoring
/// condition holds.
struct DualityReport {
  Rational primal_value;
  EcSeq primal_witness;
  bool primal_certified = false;

  Rational dual_value;
  EcSeq dual_witness;

  Rational predual_value;
  EcSeq predual_witness;

  Rational gap;
  bool condition_holds = false;
  std::size_t double_perp_defect = 0;

  std::size_t window_used = 0;  // last window tried by the witness search
};

/// S^perp: the annihilator of S inside l_infinity. For a kernel-represented
/// S this is exactly the span of the constraint functionals.
FunctionalSpan annihilator(const SubspaceKernel& s);

/// ^perp S: the pre-annihilator of S inside c0, computed as the annihilator
/// intersected with c0.
FunctionalSpan pre_annihilator(const SubspaceKernel& s);

/// (^perp S)^perp, represented as the kernel of the pre-annihilator basis.
/// Always contains S; equals S exactly when the restoring condition holds.
SubspaceKernel double_perp(const SubspaceKernel& s);

/// The restoring condition (^perp S)^perp = S, decided exactly as span
/// equality of annihilator and pre-annihilator.
bool condition_holds(const SubspaceKernel& s);

/// max { <y, lambda> : lambda in S^perp, ||lambda||_inf <= 1 }, attained;
/// returns the exact value and a maximizing lambda*. By duality this value
/// equals the minimum distance from y to S.
std::pair<Rational, EcSeq> dual_max(const EcSeq& y, const SubspaceKernel& s);

/// sup { <nu, y> : nu in ^perp S, ||nu||_inf <= 1 }, with a maximizing
/// nu* in c0 (within the representable class the supremum is attained).
std::pair<Rational, EcSeq> predual_sup(const EcSeq& y, const SubspaceKernel& s);

struct PrimalMinResult {
  Rational value;        // exact: taken from the dual side
  EcSeq witness;         // best window minimizer found
  bool certified = false;  // witness attains the value exactly
  std::size_t window_used = 0;
};

/// Exact minimum distance from y to S (value from dual_max), plus a window
/// search for an attaining x* in S with finite support. Certification can
/// legitimately fail when the infimum is not attained by a finite-support
/// point within the window budget.
PrimalMinResult primal_min(const EcSeq& y, const SubspaceKernel& s,
                           WindowPolicy windows = {});

struct Theorem2Result {
  Rational min_value;       // min { ||zeta - lambda||_inf : lambda in S^perp }
  EcSeq lambda_star;        // attaining lambda
  Rational sup_lower_bound; // sup over S-ball restricted to the window
};

/// The dual-space minimum distance identity: min_{lambda in S^perp}
/// ||zeta - lambda||_inf = sup { <x, zeta> : x in S, ||x||_1 <= 1 }. The
/// left side is computed exactly; the right side is bounded from below on
/// the given support window (equal once the window suffices).
Theorem2Result theorem2_verify(const EcSeq& zeta, const SubspaceKernel& s,
                               std::size_t window);

/// When the restoring condition fails, produces a finite-support y in
/// (^perp S)^perp \ S: for it the predual supremum is 0 while the primal
/// minimum is strictly positive. Returns nullopt when the condition holds.
/// Throws std::runtime_error if the window budget is exhausted (not
/// expected for representable subspaces).
std::optional<EcSeq> gap_witness(const SubspaceKernel& s,
                                 std::size_t window_max = 0);

/// Runs the whole analysis and checks the internal identities (primal =
/// dual, gap >= 0, condition implies zero gap) before returning.
DualityReport analyze(const EcSeq& y, const SubspaceKernel& s,
                      WindowPolicy windows = {});

/// Value of the window-N primal relaxation: minimum of ||y - x||_1 over x
/// in S supported on [0, N). Nonincreasing in N and bounded below by the
/// dual value, with equality at every certified window. Requires N >= the
/// constraint coordinate classes.
Rational truncated_primal_estimate(const EcSeq& y, const SubspaceKernel& s,
                                   std::size_t n);

}  // namespace seqdual

#endif
