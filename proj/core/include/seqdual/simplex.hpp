#ifndef SEQDUAL_SIMPLEX_HPP
#define SEQDUAL_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "seqdual/rational.hpp"

namespace seqdual {

enum class Relation { LessEq, Equal, GreaterEq };

struct LpRow {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// Optional per-variable bounds; a variable with neither bound is free.
struct VarBound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// maximize objective . v subject to the rows and bounds. Every row width
/// must equal the variable count; `bounds` is either empty (all variables
/// free) or one entry per variable.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::vector<VarBound> bounds;

  std::size_t variable_count() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                // meaningful when Optimal
  std::vector<Rational> vertex;  // feasible, value = objective . vertex
};

/// Exact two-phase simplex over the rationals with Bland's smallest-index
/// anti-cycling rule. Deterministic for a fixed input. In debug builds the
/// returned optimum is re-certified against the standard-form data via its
/// dual multipliers (weak duality with equality).
LpResult solve_lp(const LpProblem& p);

/// True iff v satisfies every row and bound exactly. Throws
/// std::invalid_argument on a width mismatch.
bool check_feasible(const LpProblem& p, const std::vector<Rational>& v);

}  // namespace seqdual

#endif
