#include "seqdual/duality.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqdual/errors.hpp"
#include "seqdual/simplex.hpp"

namespace seqdual {

namespace {

// max { <y, lambda> : lambda in span, ||lambda||_inf <= 1 } as an LP over
// span coefficients. The class values of lambda are linear in the
// coefficients, and the sup norm is the max over prefix classes and the
// tail class, so the unit ball is exactly the two rows per class. The ball
// is compact (the basis is independent), so the LP always attains.
std::pair<Rational, EcSeq> ball_max(const FunctionalSpan& span, const EcSeq& y) {
  const std::size_t dim = span.dim();
  if (dim == 0) return {Rational(0), EcSeq{}};

  const std::size_t classes = span.coordinate_classes();
  LpProblem lp;
  lp.objective.resize(dim);
  for (std::size_t i = 0; i < dim; ++i)
    lp.objective[i] = pairing(y, span.basis()[i]);

  auto class_value = [&](const EcSeq& g, std::size_t j) {
    return j + 1 < classes ? g.entry(j) : g.tail();
  };
  for (std::size_t j = 0; j < classes; ++j) {
    LpRow upper, lower;
    upper.coeffs.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
      upper.coeffs[i] = class_value(span.basis()[i], j);
    lower.coeffs = upper.coeffs;
    upper.rel = Relation::LessEq;
    upper.rhs = 1;
    lower.rel = Relation::GreaterEq;
    lower.rhs = -1;
    lp.rows.push_back(std::move(upper));
    lp.rows.push_back(std::move(lower));
  }

  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw std::logic_error("ball LP must be feasible and bounded");
  return {r.value, lin_comb(r.vertex, span.basis())};
}

// min { ||y - x||_1 : x in S, support(x) within [0, window) }, plus the
// uncovered mass sum_{k >= window} |y_k| so the value is the full norm.
std::pair<Rational, EcSeq> window_min(const EcSeq& y, const FunctionalSpan& constraints,
                                      std::size_t window) {
  // Variables: x_0..x_{W-1} free, then t_0..t_{W-1} >= 0 with t_k >= |y_k - x_k|.
  LpProblem lp;
  lp.objective.assign(2 * window, Rational(0));
  for (std::size_t k = 0; k < window; ++k) lp.objective[window + k] = -1;
  lp.bounds.resize(2 * window);
  for (std::size_t k = 0; k < window; ++k)
    lp.bounds[window + k].lower = Rational(0);

  for (std::size_t k = 0; k < window; ++k) {
    LpRow above;  // t_k + x_k >= y_k
    above.coeffs.assign(2 * window, Rational(0));
    above.coeffs[k] = 1;
    above.coeffs[window + k] = 1;
    above.rel = Relation::GreaterEq;
    above.rhs = y.entry(k);
    lp.rows.push_back(std::move(above));

    LpRow below;  // t_k - x_k >= -y_k
    below.coeffs.assign(2 * window, Rational(0));
    below.coeffs[k] = -1;
    below.coeffs[window + k] = 1;
    below.rel = Relation::GreaterEq;
    below.rhs = -y.entry(k);
    lp.rows.push_back(std::move(below));
  }
  for (const EcSeq& g : constraints.basis()) {
    LpRow membership;
    membership.coeffs.assign(2 * window, Rational(0));
    for (std::size_t k = 0; k < window; ++k) membership.coeffs[k] = g.entry(k);
    membership.rel = Relation::Equal;
    membership.rhs = 0;
    lp.rows.push_back(std::move(membership));
  }

  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw std::logic_error("window LP must be feasible and bounded");

  Rational value = -r.value;
  for (std::size_t k = window; k < y.prefix_length(); ++k)
    value += abs(y.entry(k));
  std::vector<Rational> x(r.vertex.begin(), r.vertex.begin() + window);
  return {std::move(value), EcSeq(std::move(x), Rational(0))};
}

WindowPolicy resolve_windows(const EcSeq& y, const FunctionalSpan& constraints,
                             WindowPolicy w) {
  const std::size_t base = constraints.coordinate_classes() +
                           y.prefix_length() + constraints.dim();
  if (w.start == 0) w.start = base;
  w.start = std::max<std::size_t>(
      {w.start, constraints.coordinate_classes(), y.prefix_length(), 1});
  if (w.max == 0) w.max = 64 * w.start;
  w.max = std::max(w.max, w.start);
  return w;
}

}  // namespace

FunctionalSpan annihilator(const SubspaceKernel& s) { return s.constraints(); }

FunctionalSpan pre_annihilator(const SubspaceKernel& s) {
  return intersect_with_c0(annihilator(s));
}

SubspaceKernel double_perp(const SubspaceKernel& s) {
  return SubspaceKernel(pre_annihilator(s).basis());
}

bool condition_holds(const SubspaceKernel& s) {
  return span_equals(annihilator(s), pre_annihilator(s));
}

std::pair<Rational, EcSeq> dual_max(const EcSeq& y, const SubspaceKernel& s) {
  return ball_max(annihilator(s), y);
}

std::pair<Rational, EcSeq> predual_sup(const EcSeq& y, const SubspaceKernel& s) {
  return ball_max(pre_annihilator(s), y);
}

PrimalMinResult primal_min(const EcSeq& y, const SubspaceKernel& s,
                           WindowPolicy windows) {
  const FunctionalSpan& constraints = s.constraints();
  const WindowPolicy w = resolve_windows(y, constraints, windows);

  PrimalMinResult result;
  result.value = dual_max(y, s).first;

  bool have_candidate = false;
  Rational best_value;
  for (std::size_t window = w.start;; window *= 2) {
    auto [value, x] = window_min(y, constraints, window);
    result.window_used = window;
    if (!have_candidate || value < best_value) {
      have_candidate = true;
      best_value = value;
      result.witness = std::move(x);
    }
    if (best_value == result.value) {
      result.certified = true;
      return result;
    }
    if (window >= w.max || window > w.max / 2) break;
  }
  result.certified = false;
  return result;
}

Theorem2Result theorem2_verify(const EcSeq& zeta, const SubspaceKernel& s,
                               std::size_t window) {
  const FunctionalSpan& ann = s.constraints();
  const std::size_t dim = ann.dim();

  // min ||zeta - lambda||_inf over the annihilator: variables are the span
  // coefficients plus the bound m, two rows per coordinate class.
  std::size_t prefix_classes = zeta.prefix_length();
  for (const EcSeq& g : ann.basis())
    prefix_classes = std::max(prefix_classes, g.prefix_length());

  LpProblem lp;
  lp.objective.assign(dim + 1, Rational(0));
  lp.objective[dim] = -1;  // maximize -m
  auto add_class = [&](std::size_t j, bool tail) {
    LpRow upper;  // lambda(j) - m <= zeta(j)
    upper.coeffs.assign(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
      upper.coeffs[i] = tail ? ann.basis()[i].tail() : ann.basis()[i].entry(j);
    upper.coeffs[dim] = -1;
    upper.rel = Relation::LessEq;
    upper.rhs = tail ? zeta.tail() : zeta.entry(j);

    LpRow lower;  // -lambda(j) - m <= -zeta(j)
    lower.coeffs.assign(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) lower.coeffs[i] = -upper.coeffs[i];
    lower.coeffs[dim] = -1;
    lower.rel = Relation::LessEq;
    lower.rhs = -upper.rhs;

    lp.rows.push_back(std::move(upper));
    lp.rows.push_back(std::move(lower));
  };
  for (std::size_t j = 0; j < prefix_classes; ++j) add_class(j, false);
  add_class(0, true);

  LpResult min_lp = solve_lp(lp);
  if (min_lp.status != LpStatus::Optimal)
    throw std::logic_error("minimax LP must be feasible and bounded");

  Theorem2Result out;
  out.min_value = -min_lp.value;
  std::vector<Rational> coeffs(min_lp.vertex.begin(),
                               min_lp.vertex.begin() + dim);
  out.lambda_star = lin_comb(coeffs, ann.basis());

  // sup { <x, zeta> : x in S, ||x||_1 <= 1 } restricted to the window.
  const std::size_t w = std::max<std::size_t>(window, 1);
  LpProblem sup;
  sup.objective.assign(2 * w, Rational(0));
  for (std::size_t k = 0; k < w; ++k) sup.objective[k] = zeta.entry(k);
  sup.bounds.resize(2 * w);
  for (std::size_t k = 0; k < w; ++k) sup.bounds[w + k].lower = Rational(0);
  for (std::size_t k = 0; k < w; ++k) {
    LpRow pos;  // x_k - t_k <= 0
    pos.coeffs.assign(2 * w, Rational(0));
    pos.coeffs[k] = 1;
    pos.coeffs[w + k] = -1;
    pos.rel = Relation::LessEq;
    pos.rhs = 0;
    sup.rows.push_back(std::move(pos));

    LpRow neg;  // -x_k - t_k <= 0
    neg.coeffs.assign(2 * w, Rational(0));
    neg.coeffs[k] = -1;
    neg.coeffs[w + k] = -1;
    neg.rel = Relation::LessEq;
    neg.rhs = 0;
    sup.rows.push_back(std::move(neg));
  }
  LpRow ball;  // sum t_k <= 1
  ball.coeffs.assign(2 * w, Rational(0));
  for (std::size_t k = 0; k < w; ++k) ball.coeffs[w + k] = 1;
  ball.rel = Relation::LessEq;
  ball.rhs = 1;
  sup.rows.push_back(std::move(ball));
  for (const EcSeq& g : ann.basis()) {
    LpRow membership;
    membership.coeffs.assign(2 * w, Rational(0));
    for (std::size_t k = 0; k < w; ++k) membership.coeffs[k] = g.entry(k);
    membership.rel = Relation::Equal;
    membership.rhs = 0;
    sup.rows.push_back(std::move(membership));
  }
  LpResult sup_lp = solve_lp(sup);
  if (sup_lp.status != LpStatus::Optimal)
    throw std::logic_error("window sup LP must be feasible and bounded");
  out.sup_lower_bound = sup_lp.value;
  return out;
}

std::optional<EcSeq> gap_witness(const SubspaceKernel& s,
                                 std::size_t window_max) {
  if (condition_holds(s)) return std::nullopt;

  const FunctionalSpan ann = annihilator(s);
  const FunctionalSpan pre = pre_annihilator(s);
  const std::size_t start = ann.coordinate_classes();
  if (window_max == 0) window_max = 64 * start;

  for (std::size_t window = start; window <= window_max; window *= 2) {
    for (EcSeq& candidate : kernel_basis_on_window(pre, window)) {
      for (const EcSeq& g : ann.basis()) {
        if (pairing(candidate, g) != 0) return std::move(candidate);
      }
    }
  }
  throw std::runtime_error("gap witness search exhausted its window budget");
}

DualityReport analyze(const EcSeq& y, const SubspaceKernel& s,
                      WindowPolicy windows) {
  DualityReport report;
  report.condition_holds = condition_holds(s);
  report.double_perp_defect = annihilator(s).dim() - pre_annihilator(s).dim();

  if (y.is_zero()) {
    report.primal_certified = true;
    return report;  // all values and witnesses zero
  }

  auto [dual_value, dual_witness] = dual_max(y, s);
  auto [predual_value, predual_witness] = predual_sup(y, s);
  PrimalMinResult primal = primal_min(y, s, windows);

  report.primal_value = primal.value;
  report.primal_witness = std::move(primal.witness);
  report.primal_certified = primal.certified;
  report.window_used = primal.window_used;
  report.dual_value = std::move(dual_value);
  report.dual_witness = std::move(dual_witness);
  report.predual_value = std::move(predual_value);
  report.predual_witness = std::move(predual_witness);
  report.gap = report.primal_value - report.predual_value;

  if (report.primal_value != report.dual_value)
    throw std::logic_error("internal: primal and dual values must coincide");
  if (report.gap < 0)
    throw std::logic_error("internal: duality gap must be nonnegative");
  if (report.condition_holds && report.gap != 0)
    throw std::logic_error("internal: zero gap required when the condition holds");
  return report;
}

Rational truncated_primal_estimate(const EcSeq& y, const SubspaceKernel& s,
                                   std::size_t n) {
  if (n < s.constraints().coordinate_classes())
    throw std::invalid_argument(
        "truncation window must cover the constraint coordinate classes");
  return window_min(y, s.constraints(), n).first;
}

}  // namespace seqdual
