#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace bsd {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp by binary exponentiation, exact.
inline BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return r;
}

/// Exact rational for fractional bounds such as 7k/2 - 6. Always normalized,
/// denominator positive. Small components only; comparisons cross-multiply
/// in 128 bits so no overflow at the magnitudes that occur here.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Parse error with the byte offset where scanning stopped.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"),
        offset(off) {}
};

/// Raised when an input exceeds a configured kernel or enumeration capacity.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bsd
