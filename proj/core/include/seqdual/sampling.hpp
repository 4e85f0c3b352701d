#ifndef SEQDUAL_SAMPLING_HPP
#define SEQDUAL_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "seqdual/ec_seq.hpp"
#include "seqdual/span.hpp"

namespace seqdual {

/// Bounds for random instances: small enough for desk-scale exact LPs.
struct SampleBounds {
  std::size_t max_constraints = 4;
  std::size_t max_prefix = 6;
  long max_abs_numerator = 9;
  long max_denominator = 9;
};

/// Deterministic generator of random rationals, finite-support points, and
/// kernel subspaces. Same seed, same stream, independent of the standard
/// library's distribution implementations.
class Sampler {
 public:
  static constexpr std::uint64_t kDefaultSeed = 1729;

  explicit Sampler(std::uint64_t seed = kDefaultSeed, SampleBounds bounds = {})
      : rng_(seed), bounds_(bounds) {}

  /// Uniform over numerators in [-max_abs_numerator, max_abs_numerator] and
  /// denominators in [1, max_denominator] (then reduced).
  Rational rational();
  Rational nonzero_rational();

  /// Finite-support point (tail 0) with prefix length <= max_prefix.
  EcSeq point();

  /// Eventually-constant functional; tail forced to 0 when requested,
  /// otherwise zero or random with equal probability.
  EcSeq functional(bool zero_tail = false);

  /// 1..max_constraints functionals defining a kernel subspace.
  std::vector<EcSeq> constraint_set(bool zero_tail_only = false);

  long integer_in(long lo, long hi);
  bool coin() { return integer_in(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
  SampleBounds bounds_;
};

}  // namespace seqdual

#endif
