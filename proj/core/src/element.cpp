#include "bsdilate/element.hpp"

#include <cctype>

namespace bsd {

MonoidElement multiply(const MonoidElement& e1, const MonoidElement& e2,
                       const GroupParams& p) {
  if (e1.m > kBExponentCap - e2.m) {
    throw std::overflow_error("multiply: b-exponent exceeds cap " +
                              std::to_string(kBExponentCap));
  }
  MonoidElement r;
  r.m = e1.m + e2.m;
  r.x = pow_int(p.n(), e2.m) * e1.x + e2.x;
  return r;
}

MonoidElement power(const MonoidElement& e, unsigned j, const GroupParams& p) {
  MonoidElement acc = identity();
  for (unsigned i = 0; i < j; ++i) acc = multiply(acc, e, p);
  return acc;
}

bool commutes(const MonoidElement& e1, const MonoidElement& e2,
              const GroupParams& p) {
  return (pow_int(p.n(), e2.m) - 1) * e1.x == (pow_int(p.n(), e1.m) - 1) * e2.x;
}

namespace {

BigInt parse_signed_int(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) throw ParseError("expected integer", start);
  BigInt v(std::string(s.substr(digits, i - digits)));
  return neg ? -v : v;
}

}  // namespace

MonoidElement parse_element(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };

  skip_ws();
  MonoidElement e;
  bool have_b = false, have_a = false;
  if (i < text.size() && text[i] == 'b') {
    ++i;
    expect('^');
    BigInt mv = parse_signed_int(text, i);
    if (mv < 0)
      throw std::domain_error("negative b-exponent: element outside BS+");
    if (mv > kBExponentCap)
      throw std::overflow_error("b-exponent exceeds cap " +
                                std::to_string(kBExponentCap));
    e.m = mv.convert_to<unsigned>();
    have_b = true;
    if (i < text.size() && text[i] == '*') {
      ++i;
      if (i >= text.size() || text[i] != 'a')
        throw ParseError("expected 'a' after '*'", i);
    }
  }
  if (i < text.size() && text[i] == 'a') {
    ++i;
    expect('^');
    e.x = parse_signed_int(text, i);
    have_a = true;
  }
  skip_ws();
  if (i != text.size() || (!have_b && !have_a))
    throw ParseError("malformed element", i);
  return e;
}

std::string format_element(const MonoidElement& e) {
  if (e.m == 0) return "a^" + e.x.str();
  if (e.x == 0) return "b^" + std::to_string(e.m);
  return "b^" + std::to_string(e.m) + "*a^" + e.x.str();
}

}  // namespace bsd
