#ifndef SEQDUAL_RATIONAL_HPP
#define SEQDUAL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace seqdual {

/// Exact arbitrary-precision integer (GMP-backed).
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact arbitrary-precision rational, the only scalar type in the core.
/// Always held in canonical form: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
/// GMP maintains canonicity through every arithmetic operation, so equality
/// is structural.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses the textual syntax `[-]p[/q]` (optional minus sign, integer,
/// optional positive-integer denominator). Throws ParseError with the
/// offending column on malformed text or a zero denominator. The result is
/// canonical, so e.g. "-3/6" parses to -1/2.
Rational parse_rational(std::string_view text);

/// Renders without a denominator when it is 1 ("2", "-1/2"). Inverse of
/// parse_rational on every representable value.
std::string render_rational(const Rational& r);

/// Renders always as "num/den" ("2/1", "-1/2"); the exact machine syntax.
std::string render_rational_exact(const Rational& r);

}  // namespace seqdual

#endif
