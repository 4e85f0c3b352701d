#ifndef SEQDUAL_EC_SEQ_HPP
#define SEQDUAL_EC_SEQ_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seqdual/rational.hpp"

namespace seqdual {

/// An eventually-constant rational sequence: finitely many explicit entries
/// followed by a constant tail. Always canonical: the last explicit entry
/// differs from the tail (minimal prefix), so structural equality is value
/// equality. The zero sequence is (empty prefix, tail 0).
///
/// With tail 0 these are the finite-support sequences, the representable
/// elements of l1 and c0; with arbitrary tail they represent elements of
/// l_infinity.
class EcSeq {
 public:
  /// The zero sequence.
  EcSeq() : tail_(0) {}

  /// Canonicalizes: trailing prefix entries equal to `tail` are absorbed.
  EcSeq(std::vector<Rational> prefix, Rational tail);

  /// Entry at index k: prefix[k] for k < prefix_length(), else the tail.
  const Rational& entry(std::size_t k) const {
    return k < prefix_.size() ? prefix_[k] : tail_;
  }

  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& tail() const { return tail_; }

  /// Canonical prefix length; all entries from this index on equal the tail.
  std::size_t prefix_length() const { return prefix_.size(); }

  bool is_zero() const { return prefix_.empty() && tail_ == 0; }
  bool has_zero_tail() const { return tail_ == 0; }

  bool operator==(const EcSeq&) const = default;

  /// k-th standard unit sequence e_k.
  static EcSeq unit(std::size_t k);
  /// The constant sequence (c, c, c, ...).
  static EcSeq constant(const Rational& c) { return EcSeq({}, c); }

 private:
  std::vector<Rational> prefix_;
  Rational tail_;
};

/// Membership tags for the three concrete spaces.
enum class SpaceTag { L1, Linf, C0 };

/// Every EcSeq lies in l_infinity; membership in c0 and (representably) in
/// l1 both reduce to a zero tail.
bool in_space(const EcSeq& s, SpaceTag tag);

/// The bilinear pairing <x, f> = sum_k f_k x_k. Requires x.tail() == 0 so
/// the series is a finite sum; throws DomainError otherwise.
Rational pairing(const EcSeq& x, const EcSeq& f);

/// sup_k |entry(k)|: the l_infinity norm.
Rational sup_norm(const EcSeq& f);

/// sum_k |entry(k)| for a finite-support sequence; throws DomainError when
/// the tail is nonzero.
Rational l1_norm(const EcSeq& x);

/// Canonical sum_i coeffs[i] * seqs[i]; throws std::invalid_argument on a
/// length mismatch.
EcSeq lin_comb(std::span<const Rational> coeffs, std::span<const EcSeq> seqs);

EcSeq operator+(const EcSeq& a, const EcSeq& b);
EcSeq operator-(const EcSeq& a, const EcSeq& b);
EcSeq operator*(const Rational& c, const EcSeq& s);

/// Sequence literal `[r0, r1, ... | tail]`; empty prefix renders as
/// `[| tail]`. With `exact` set, rationals render as num/den.
std::string render_sequence(const EcSeq& s, bool exact = false);

/// Parses the sequence literal syntax. Throws ParseError with a 1-based
/// column into `text`.
EcSeq parse_sequence(std::string_view text);

}  // namespace seqdual

#endif
