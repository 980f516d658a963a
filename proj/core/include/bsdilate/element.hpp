#pragma once

#include <string>
#include <string_view>

#include "bsdilate/bigint.hpp"

namespace bsd {

/// The dilation base n of BS(1,n) with relation ab = ba^n. Requires n >= 2.
class GroupParams {
 public:
  explicit GroupParams(unsigned base) : n_(base) {
    if (base < 2) throw std::domain_error("GroupParams: base must be >= 2");
  }
  unsigned n() const { return n_; }
  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  unsigned n_;
};

/// Guard against runaway b-exponents; every scenario of interest has tiny m.
inline constexpr unsigned kBExponentCap = 64;

/// Normal form b^m a^x with m >= 0. The a-exponent is arbitrary precision.
struct MonoidElement {
  unsigned m = 0;
  BigInt x = 0;

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
  friend bool operator<(const MonoidElement& a, const MonoidElement& b) {
    return a.m != b.m ? a.m < b.m : a.x < b.x;
  }
};

inline MonoidElement identity() { return {}; }

/// (b^r a^x)(b^p a^y) = b^{r+p} a^{n^p x + y}, exact.
/// Throws std::overflow_error past the b-exponent cap.
MonoidElement multiply(const MonoidElement& e1, const MonoidElement& e2,
                       const GroupParams& p);

/// j-fold product; power(e, 0) is the identity.
MonoidElement power(const MonoidElement& e, unsigned j, const GroupParams& p);

/// True iff e1 e2 = e2 e1; equivalently (n^{m2}-1) x1 = (n^{m1}-1) x2.
bool commutes(const MonoidElement& e1, const MonoidElement& e2,
              const GroupParams& p);

/// Grammar: b^<uint>*a^<int>, either factor omissible when its exponent is 0
/// (e.g. "a^5", "b^2", "b^2*a^-5"). Negative b-exponents are a domain error
/// (outside the monoid); other malformed input throws ParseError.
MonoidElement parse_element(std::string_view text);

/// Inverse of parse_element: parse_element(format_element(e)) == e.
std::string format_element(const MonoidElement& e);

}  // namespace bsd
