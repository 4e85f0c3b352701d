#include "seqdual/span.hpp"

#include <algorithm>
#include <utility>

#include "matrix.hpp"

namespace seqdual {

namespace {

// Chart: the sequence as the (window+1)-vector of its prefix classes plus
// the tail class. Exact for any sequence with canonical prefix <= window.
std::vector<Rational> to_classes(const EcSeq& s, std::size_t window) {
  std::vector<Rational> row(window + 1);
  for (std::size_t k = 0; k < window; ++k) row[k] = s.entry(k);
  row[window] = s.tail();
  return row;
}

EcSeq from_classes(const std::vector<Rational>& row) {
  std::vector<Rational> prefix(row.begin(), row.end() - 1);
  return EcSeq(std::move(prefix), row.back());
}

std::size_t joint_window(const std::vector<EcSeq>& vectors) {
  std::size_t w = 0;
  for (const EcSeq& v : vectors) w = std::max(w, v.prefix_length());
  return w;
}

}  // namespace

std::size_t FunctionalSpan::coordinate_classes() const {
  return joint_window(basis_) + 1;
}

bool FunctionalSpan::contains(const EcSeq& v) const {
  if (v.is_zero()) return true;
  std::vector<EcSeq> extended = basis_;
  extended.push_back(v);
  return reduce_span(extended).dim() == dim();
}

FunctionalSpan reduce_span(const std::vector<EcSeq>& vectors) {
  const std::size_t window = joint_window(vectors);
  detail::Matrix m;
  m.reserve(vectors.size());
  for (const EcSeq& v : vectors) m.push_back(to_classes(v, window));
  detail::RrefResult r = detail::rref(std::move(m));
  std::vector<EcSeq> basis;
  basis.reserve(r.rows.size());
  for (const auto& row : r.rows) basis.push_back(from_classes(row));
  return FunctionalSpan(std::move(basis));
}

FunctionalSpan intersect_with_c0(const FunctionalSpan& sp) {
  std::vector<Rational> tails(sp.dim());
  bool all_zero = true;
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    tails[i] = sp.basis()[i].tail();
    if (tails[i] != 0) all_zero = false;
  }
  if (all_zero) return sp;

  // One linear condition on coefficients: sum c_i tail(b_i) = 0.
  detail::Matrix condition{std::move(tails)};
  std::vector<EcSeq> generators;
  for (const auto& coeffs : detail::nullspace(condition, sp.dim()))
    generators.push_back(lin_comb(coeffs, sp.basis()));
  return reduce_span(generators);
}

bool span_equals(const FunctionalSpan& a, const FunctionalSpan& b) {
  // Reduced bases are canonical, and canonical sequences compare
  // structurally; no joint re-reduction needed.
  return a.basis() == b.basis();
}

std::vector<EcSeq> kernel_basis_on_window(const FunctionalSpan& sp,
                                          std::size_t window) {
  detail::Matrix m;
  m.reserve(sp.dim());
  for (const EcSeq& b : sp.basis()) {
    std::vector<Rational> row(window);
    for (std::size_t k = 0; k < window; ++k) row[k] = b.entry(k);
    m.push_back(std::move(row));
  }
  std::vector<EcSeq> basis;
  for (auto& v : detail::nullspace(m, window))
    basis.push_back(EcSeq(std::move(v), Rational(0)));
  return basis;
}

bool SubspaceKernel::contains(const EcSeq& x) const {
  for (const EcSeq& g : constraints_.basis())
    if (pairing(x, g) != 0) return false;
  return true;
}

}  // namespace seqdual
