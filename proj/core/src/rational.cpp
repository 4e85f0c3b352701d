#include "seqdual/rational.hpp"

#include <cctype>
#include <cstddef>

#include "seqdual/errors.hpp"

namespace seqdual {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Consumes a run of digits starting at `pos`, returning the value. `pos` is
// advanced past the run. Columns in errors are 1-based.
Integer read_digits(std::string_view text, std::size_t& pos, const char* what) {
  if (pos >= text.size() || !is_digit(text[pos]))
    throw ParseError(std::string("expected ") + what, pos + 1);
  std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  return Integer(std::string(text.substr(start, pos - start)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  Integer num = read_digits(text, pos, "integer");
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_col = ++pos;
    den = read_digits(text, pos, "positive denominator");
    if (den == 0) throw ParseError("zero denominator", den_col + 1);
  }
  if (pos != text.size())
    throw ParseError("trailing characters after rational", pos + 1);
  if (negative) num = -num;
  // Division canonicalizes (gcd reduced, positive denominator).
  return Rational(num) / Rational(den);
}

std::string render_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string render_rational_exact(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace seqdual
