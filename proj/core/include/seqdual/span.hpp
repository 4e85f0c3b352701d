#ifndef SEQDUAL_SPAN_HPP
#define SEQDUAL_SPAN_HPP

#include <cstddef>
#include <vector>

#include "seqdual/ec_seq.hpp"

namespace seqdual {

/// A finite-dimensional subspace of the eventually-constant sequences, held
/// as a reduced row-echelon basis over the coordinate classes (prefix
/// indices 0..L-1 plus the shared tail class, L = max canonical prefix
/// length). The reduced basis is unique for a given span, so structural
/// equality of bases decides span equality.
class FunctionalSpan {
 public:
  FunctionalSpan() = default;

  const std::vector<EcSeq>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinate classes spanned: max prefix length over the basis, plus one
  /// for the tail class. The zero span still has the tail class.
  std::size_t coordinate_classes() const;

  /// Exact membership test.
  bool contains(const EcSeq& v) const;

  bool operator==(const FunctionalSpan&) const = default;

 private:
  friend FunctionalSpan reduce_span(const std::vector<EcSeq>& vectors);
  explicit FunctionalSpan(std::vector<EcSeq> reduced_basis)
      : basis_(std::move(reduced_basis)) {}

  std::vector<EcSeq> basis_;
};

/// Row-reduces the given vectors over their joint coordinate-class window.
/// The result is independent of the window width, so spans built from
/// different generating sets compare structurally.
FunctionalSpan reduce_span(const std::vector<EcSeq>& vectors);

/// Basis of {v in sp : v.tail = 0}: the intersection with c0. One linear
/// condition on coefficients, so the dimension drops by at most one.
FunctionalSpan intersect_with_c0(const FunctionalSpan& sp);

/// True iff the two spans coincide as sets.
bool span_equals(const FunctionalSpan& a, const FunctionalSpan& b);

/// Basis of {x supported on [0, W) : pairing(x, b) = 0 for every basis b}.
/// Every returned sequence has tail 0 and its first nonzero entry is +1.
std::vector<EcSeq> kernel_basis_on_window(const FunctionalSpan& sp,
                                          std::size_t window);

/// A subspace S of l1 given as the common kernel of finitely many
/// eventually-constant functionals. Constraints are stored reduced, so
/// adding a dependent constraint leaves the object unchanged.
class SubspaceKernel {
 public:
  /// S = { x in l1 : <x, g> = 0 for every g in constraints }.
  explicit SubspaceKernel(const std::vector<EcSeq>& constraints)
      : constraints_(reduce_span(constraints)) {}

  /// S = all of l1 (empty constraint set).
  static SubspaceKernel whole_space() { return SubspaceKernel({}); }

  const FunctionalSpan& constraints() const { return constraints_; }
  std::size_t constraint_count() const { return constraints_.dim(); }

  /// Exact membership for finite-support x (throws DomainError on a
  /// nonzero tail, as the pairing does).
  bool contains(const EcSeq& x) const;

  bool operator==(const SubspaceKernel&) const = default;

 private:
  FunctionalSpan constraints_;
};

}  // namespace seqdual

#endif
