#include "seqdual/sampling.hpp"

namespace seqdual {

long Sampler::integer_in(long lo, long hi) {
  const auto width = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % width);
}

Rational Sampler::rational() {
  const long num = integer_in(-bounds_.max_abs_numerator, bounds_.max_abs_numerator);
  const long den = integer_in(1, bounds_.max_denominator);
  return Rational(num) / Rational(den);
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

EcSeq Sampler::point() {
  const std::size_t len =
      static_cast<std::size_t>(integer_in(0, static_cast<long>(bounds_.max_prefix)));
  std::vector<Rational> prefix(len);
  for (Rational& e : prefix) e = rational();
  return EcSeq(std::move(prefix), Rational(0));
}

EcSeq Sampler::functional(bool zero_tail) {
  const std::size_t len =
      static_cast<std::size_t>(integer_in(0, static_cast<long>(bounds_.max_prefix)));
  std::vector<Rational> prefix(len);
  for (Rational& e : prefix) e = rational();
  Rational tail = (zero_tail || coin()) ? Rational(0) : nonzero_rational();
  return EcSeq(std::move(prefix), std::move(tail));
}

std::vector<EcSeq> Sampler::constraint_set(bool zero_tail_only) {
  const std::size_t count = static_cast<std::size_t>(
      integer_in(1, static_cast<long>(bounds_.max_constraints)));
  std::vector<EcSeq> set;
  set.reserve(count);
  for (std::size_t i = 0; i < count; ++i) set.push_back(functional(zero_tail_only));
  return set;
}

}  // namespace seqdual
