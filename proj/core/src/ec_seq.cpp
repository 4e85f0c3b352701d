#include "seqdual/ec_seq.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "seqdual/errors.hpp"

namespace seqdual {

EcSeq::EcSeq(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

EcSeq EcSeq::unit(std::size_t k) {
  std::vector<Rational> prefix(k + 1, Rational(0));
  prefix[k] = 1;
  return EcSeq(std::move(prefix), Rational(0));
}

bool in_space(const EcSeq& s, SpaceTag tag) {
  switch (tag) {
    case SpaceTag::Linf:
      return true;
    case SpaceTag::C0:
    case SpaceTag::L1:
      return s.has_zero_tail();
  }
  return false;
}

Rational pairing(const EcSeq& x, const EcSeq& f) {
  if (!x.has_zero_tail())
    throw DomainError("pairing requires a finite-support left argument (tail 0)");
  Rational sum(0);
  for (std::size_t k = 0; k < x.prefix_length(); ++k)
    sum += x.entry(k) * f.entry(k);
  return sum;
}

Rational sup_norm(const EcSeq& f) {
  Rational best = abs(f.tail());
  for (const Rational& e : f.prefix()) best = std::max(best, abs(e));
  return best;
}

Rational l1_norm(const EcSeq& x) {
  if (!x.has_zero_tail())
    throw DomainError("l1 norm requires a finite-support sequence (tail 0)");
  Rational sum(0);
  for (const Rational& e : x.prefix()) sum += abs(e);
  return sum;
}

EcSeq lin_comb(std::span<const Rational> coeffs, std::span<const EcSeq> seqs) {
  if (coeffs.size() != seqs.size())
    throw std::invalid_argument("lin_comb: coefficient/sequence count mismatch");
  std::size_t window = 0;
  for (const EcSeq& s : seqs) window = std::max(window, s.prefix_length());
  std::vector<Rational> prefix(window, Rational(0));
  Rational tail(0);
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t k = 0; k < window; ++k)
      prefix[k] += coeffs[i] * seqs[i].entry(k);
    tail += coeffs[i] * seqs[i].tail();
  }
  return EcSeq(std::move(prefix), std::move(tail));
}

EcSeq operator+(const EcSeq& a, const EcSeq& b) {
  const Rational one(1);
  const Rational cs[] = {one, one};
  const EcSeq ss[] = {a, b};
  return lin_comb(cs, ss);
}

EcSeq operator-(const EcSeq& a, const EcSeq& b) {
  const Rational cs[] = {Rational(1), Rational(-1)};
  const EcSeq ss[] = {a, b};
  return lin_comb(cs, ss);
}

EcSeq operator*(const Rational& c, const EcSeq& s) {
  const Rational cs[] = {c};
  const EcSeq ss[] = {s};
  return lin_comb(cs, ss);
}

std::string render_sequence(const EcSeq& s, bool exact) {
  auto num = [exact](const Rational& r) {
    return exact ? render_rational_exact(r) : render_rational(r);
  };
  std::string out = "[";
  for (std::size_t k = 0; k < s.prefix_length(); ++k) {
    if (k > 0) out += ", ";
    out += num(s.prefix()[k]);
  }
  out += s.prefix_length() ? " | " : "| ";
  out += num(s.tail());
  out += "]";
  return out;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

// A rational token runs until whitespace or a delimiter.
Rational read_rational(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] != ',' && text[pos] != '|' &&
         text[pos] != ']' && text[pos] != ' ' && text[pos] != '\t')
    ++pos;
  if (pos == start) throw ParseError("expected rational", start + 1);
  try {
    return parse_rational(text.substr(start, pos - start));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), start + e.column());
  }
}

}  // namespace

EcSeq parse_sequence(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[')
    throw ParseError("expected '[' to open sequence literal", pos + 1);
  ++pos;
  std::vector<Rational> prefix;
  skip_ws(text, pos);
  while (pos < text.size() && text[pos] != '|') {
    prefix.push_back(read_rational(text, pos));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '|')
        throw ParseError("expected rational after ','", pos + 1);
    } else {
      break;
    }
  }
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '|')
    throw ParseError("expected '|' before tail value", pos + 1);
  ++pos;
  skip_ws(text, pos);
  Rational tail = read_rational(text, pos);
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ']')
    throw ParseError("expected ']' to close sequence literal", pos + 1);
  ++pos;
  skip_ws(text, pos);
  if (pos != text.size())
    throw ParseError("trailing characters after sequence literal", pos + 1);
  return EcSeq(std::move(prefix), std::move(tail));
}

}  // namespace seqdual
