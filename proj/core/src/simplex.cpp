#include "seqdual/simplex.hpp"

#include <cassert>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqdual {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// How an original variable maps onto nonnegative standard-form columns.
struct VarMap {
  Rational offset;        // v = offset + col - (neg_col if split)
  std::size_t col = kNone;
  std::size_t neg_col = kNone;  // kNone unless the variable is free
  bool negated = false;         // v = offset - col (upper bound only)
};

// Standard form: maximize c . x, A x = b, x >= 0, b >= 0.
struct StandardForm {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<VarMap> vars;
  Rational objective_offset;
  std::size_t real_cols = 0;   // columns before the artificials
  std::size_t art_begin = 0;   // first artificial column
};

void validate(const LpProblem& p) {
  const std::size_t n = p.variable_count();
  for (const LpRow& row : p.rows)
    if (row.coeffs.size() != n)
      throw std::invalid_argument("lp row width does not match variable count");
  if (!p.bounds.empty() && p.bounds.size() != n)
    throw std::invalid_argument("lp bounds size does not match variable count");
}

StandardForm build_standard_form(const LpProblem& p) {
  const std::size_t n = p.variable_count();
  StandardForm sf;
  sf.vars.resize(n);
  sf.objective_offset = 0;

  // Substitute each variable by nonnegative columns. Finite upper bounds
  // become extra <= rows on the substituted column.
  struct PendingRow {
    std::vector<std::pair<std::size_t, Rational>> entries;
    Relation rel;
    Rational rhs;
  };
  std::vector<PendingRow> extra_rows;
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    VarBound bound = p.bounds.empty() ? VarBound{} : p.bounds[j];
    VarMap& vm = sf.vars[j];
    if (bound.lower) {
      vm.offset = *bound.lower;
      vm.col = cols++;
      if (bound.upper) {
        // Negative rhs when upper < lower; phase 1 then reports Infeasible.
        extra_rows.push_back(
            {{{vm.col, Rational(1)}}, Relation::LessEq, *bound.upper - *bound.lower});
      }
    } else if (bound.upper) {
      vm.offset = *bound.upper;
      vm.col = cols++;
      vm.negated = true;  // v = upper - x
    } else {
      vm.offset = 0;
      vm.col = cols++;
      vm.neg_col = cols++;
    }
  }

  // Substituted rows: sum_j a_j v_j rel rhs.
  auto substitute = [&](const std::vector<Rational>& coeffs, Relation rel,
                        const Rational& rhs) {
    std::vector<Rational> row(cols, Rational(0));
    Rational adjusted = rhs;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      const VarMap& vm = sf.vars[j];
      adjusted -= coeffs[j] * vm.offset;
      row[vm.col] += vm.negated ? -coeffs[j] : coeffs[j];
      if (vm.neg_col != kNone) row[vm.neg_col] -= coeffs[j];
    }
    sf.a.push_back(std::move(row));
    sf.b.push_back(std::move(adjusted));
    return rel;
  };

  std::vector<Relation> rels;
  for (const LpRow& r : p.rows) rels.push_back(substitute(r.coeffs, r.rel, r.rhs));
  for (const PendingRow& r : extra_rows) {
    std::vector<Rational> row(cols, Rational(0));
    for (const auto& [col, coeff] : r.entries) row[col] = coeff;
    sf.a.push_back(std::move(row));
    sf.b.push_back(r.rhs);
    rels.push_back(r.rel);
  }

  // Slack / surplus columns turn inequalities into equalities.
  const std::size_t m = sf.a.size();
  std::size_t slack_count = 0;
  for (Relation rel : rels)
    if (rel != Relation::Equal) ++slack_count;
  const std::size_t slack_begin = cols;
  std::size_t next_slack = slack_begin;
  for (std::size_t i = 0; i < m; ++i) {
    sf.a[i].resize(slack_begin + slack_count, Rational(0));
    if (rels[i] == Relation::LessEq)
      sf.a[i][next_slack++] = 1;
    else if (rels[i] == Relation::GreaterEq)
      sf.a[i][next_slack++] = -1;
  }
  sf.real_cols = slack_begin + slack_count;

  // Nonnegative right-hand sides.
  for (std::size_t i = 0; i < m; ++i) {
    if (sf.b[i] < 0) {
      sf.b[i] = -sf.b[i];
      for (Rational& x : sf.a[i]) x = -x;
    }
  }

  // One artificial per row; the identity start basis.
  sf.art_begin = sf.real_cols;
  for (std::size_t i = 0; i < m; ++i) {
    sf.a[i].resize(sf.real_cols + m, Rational(0));
    sf.a[i][sf.art_begin + i] = 1;
  }

  // Objective over standard columns.
  sf.c.assign(sf.real_cols + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& cj = p.objective[j];
    if (cj == 0) continue;
    const VarMap& vm = sf.vars[j];
    sf.objective_offset += cj * vm.offset;
    sf.c[vm.col] += vm.negated ? -cj : cj;
    if (vm.neg_col != kNone) sf.c[vm.neg_col] -= cj;
  }
  return sf;
}

// Full-tableau simplex state. The objective row holds reduced costs and
// (in its rhs cell) the negated objective value.
struct Tableau {
  std::vector<std::vector<Rational>> a;  // m x cols
  std::vector<Rational> b;               // m
  std::vector<Rational> reduced;         // cols
  Rational neg_value;
  std::vector<std::size_t> basis;        // basic column per row
  std::size_t cols = 0;

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / a[row][col];
    for (Rational& x : a[row]) x *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    if (reduced[col] != 0) {
      const Rational f = reduced[col];
      for (std::size_t j = 0; j < cols; ++j) reduced[j] -= f * a[row][j];
      neg_value -= f * b[row];
    }
    basis[row] = col;
  }

  // Rebuilds the reduced-cost row for objective `c` from the current basis.
  void load_objective(const std::vector<Rational>& c) {
    reduced = c;
    reduced.resize(cols, Rational(0));
    neg_value = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational f = reduced[basis[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) reduced[j] -= f * a[i][j];
      neg_value -= f * b[i];
    }
  }

  // Bland's rule: entering = smallest eligible column with positive reduced
  // cost; leaving = min-ratio row, ties broken by smallest basic column.
  // Returns Optimal when no entering column exists, Unbounded when the
  // entering column has no positive entry.
  LpStatus run(std::size_t eligible_cols) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < eligible_cols; ++j) {
        if (reduced[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return LpStatus::Optimal;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        const Rational ratio = b[i] / a[i][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

#ifndef NDEBUG
// Optimality certificate from the final tableau: dual multipliers read off
// the artificial columns must price every column out and reproduce the
// optimal value against the untouched standard-form data.
void certify_optimum(const StandardForm& sf, const Tableau& t,
                     const Rational& value_std) {
  const std::size_t m = sf.b.size();
  std::vector<Rational> y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = -t.reduced[sf.art_begin + i];
  Rational bound(0);
  for (std::size_t i = 0; i < m; ++i) bound += y[i] * sf.b[i];
  assert(bound == value_std && "dual bound must equal the primal optimum");
  for (std::size_t j = 0; j < sf.real_cols; ++j) {
    Rational priced = sf.c[j];
    for (std::size_t i = 0; i < m; ++i) priced -= y[i] * sf.a[i][j];
    assert(priced <= 0 && "dual multipliers must price out every column");
  }
}
#endif

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  validate(p);
  StandardForm sf = build_standard_form(p);
  const std::size_t m = sf.b.size();

  Tableau t;
  t.a = sf.a;
  t.b = sf.b;
  t.cols = sf.real_cols + m;
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) t.basis[i] = sf.art_begin + i;

  // Phase 1: maximize -(sum of artificials); 0 iff feasible.
  std::vector<Rational> phase1(t.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[sf.art_begin + i] = -1;
  t.load_objective(phase1);
  LpStatus s1 = t.run(t.cols);
  assert(s1 == LpStatus::Optimal);  // phase-1 objective is bounded above by 0
  (void)s1;
  if (t.neg_value != 0) return LpResult{LpStatus::Infeasible, Rational(0), {}};

  // Drive basic artificials out on any nonzero real entry (their rows are
  // degenerate, so feasibility is preserved); rows with no such entry are
  // redundant and stay inert.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < sf.art_begin) continue;
    for (std::size_t j = 0; j < sf.real_cols; ++j) {
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over the real columns only.
  t.load_objective(sf.c);
  LpStatus s2 = t.run(sf.real_cols);
  if (s2 == LpStatus::Unbounded)
    return LpResult{LpStatus::Unbounded, Rational(0), {}};

  std::vector<Rational> x_std(t.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) x_std[t.basis[i]] = t.b[i];

  LpResult result;
  result.status = LpStatus::Optimal;
  result.vertex.resize(p.variable_count());
  for (std::size_t j = 0; j < p.variable_count(); ++j) {
    const VarMap& vm = sf.vars[j];
    Rational v = vm.negated ? vm.offset - x_std[vm.col] : vm.offset + x_std[vm.col];
    if (vm.neg_col != kNone) v -= x_std[vm.neg_col];
    result.vertex[j] = v;
  }
  Rational value(0);
  for (std::size_t j = 0; j < p.variable_count(); ++j)
    value += p.objective[j] * result.vertex[j];
  result.value = value;

#ifndef NDEBUG
  assert(value == -t.neg_value + sf.objective_offset);
  certify_optimum(sf, t, -t.neg_value);
#endif
  return result;
}

bool check_feasible(const LpProblem& p, const std::vector<Rational>& v) {
  if (v.size() != p.variable_count())
    throw std::invalid_argument("point width does not match variable count");
  if (!p.bounds.empty()) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (p.bounds[j].lower && v[j] < *p.bounds[j].lower) return false;
      if (p.bounds[j].upper && v[j] > *p.bounds[j].upper) return false;
    }
  }
  for (const LpRow& row : p.rows) {
    if (row.coeffs.size() != v.size())
      throw std::invalid_argument("lp row width does not match variable count");
    Rational lhs(0);
    for (std::size_t j = 0; j < v.size(); ++j) lhs += row.coeffs[j] * v[j];
    switch (row.rel) {
      case Relation::LessEq:
        if (lhs > row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace seqdual
