#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsdilate/element.hpp"

using namespace bsd;

namespace {

MonoidElement rand_elem(std::mt19937_64& rng, bool huge) {
  std::uniform_int_distribution<unsigned> md(0, 4);
  std::uniform_int_distribution<long long> xd(-1000, 1000);
  MonoidElement e{md(rng), BigInt(xd(rng))};
  if (huge) e.x *= BigInt("123456789123456789123456789");
  return e;
}

}  // namespace

TEST_CASE("multiply matches the normal-form identity") {
  GroupParams p(3);
  CHECK(multiply({0, 1}, {1, 0}, p) == MonoidElement{1, 3});
  CHECK(multiply({1, 0}, {0, 1}, p) == MonoidElement{1, 1});
  // (b^1 a^2)(b^2 a^5) = b^3 a^{3^2*2+5}
  CHECK(multiply({1, 2}, {2, 5}, p) == MonoidElement{3, 23});
  GroupParams p2(2);
  CHECK(multiply({1, 2}, {2, 5}, p2) == MonoidElement{3, 13});
}

TEST_CASE("identity is neutral and power iterates") {
  GroupParams p(3);
  MonoidElement e{2, -7};
  CHECK(multiply(identity(), e, p) == e);
  CHECK(multiply(e, identity(), p) == e);
  CHECK(power(e, 0, p) == identity());
  CHECK(power(e, 1, p) == e);
  CHECK(power(e, 3, p) == multiply(e, multiply(e, e, p), p));
}

TEST_CASE("b-exponent cap is enforced") {
  GroupParams p(3);
  CHECK_THROWS_AS(multiply({40, 0}, {40, 0}, p), std::overflow_error);
  CHECK_THROWS_AS(parse_element("b^65*a^0"), std::overflow_error);
  CHECK_NOTHROW(multiply({32, 0}, {32, 0}, p));
}

TEST_CASE("associativity on random triples, including >64-bit exponents") {
  std::mt19937_64 rng(2024);
  for (unsigned n : {2u, 3u, 5u}) {
    GroupParams p(n);
    for (int i = 0; i < 3500; ++i) {
      bool huge = i % 4 == 0;
      MonoidElement a = rand_elem(rng, huge), b = rand_elem(rng, huge),
                    c = rand_elem(rng, huge);
      CHECK(multiply(multiply(a, b, p), c, p) ==
            multiply(a, multiply(b, c, p), p));
    }
  }
}

TEST_CASE("left and right cancellation") {
  std::mt19937_64 rng(7);
  GroupParams p(3);
  for (int i = 0; i < 3000; ++i) {
    MonoidElement a = rand_elem(rng, false), b = rand_elem(rng, false),
                  c = rand_elem(rng, false);
    if (b == c) continue;
    CHECK(multiply(a, b, p) != multiply(a, c, p));
    CHECK(multiply(b, a, p) != multiply(c, a, p));
  }
}

TEST_CASE("commutes agrees with the closed form and with brute force") {
  std::mt19937_64 rng(11);
  for (unsigned n : {2u, 3u}) {
    GroupParams p(n);
    for (int i = 0; i < 2000; ++i) {
      MonoidElement a = rand_elem(rng, false), b = rand_elem(rng, false);
      bool brute = multiply(a, b, p) == multiply(b, a, p);
      CHECK(commutes(a, b, p) == brute);
      BigInt lhs = (pow_int(BigInt(n), b.m) - 1) * a.x;
      BigInt rhs = (pow_int(BigInt(n), a.m) - 1) * b.x;
      CHECK(commutes(a, b, p) == (lhs == rhs));
    }
  }
  GroupParams p3(3);
  CHECK_FALSE(commutes({0, 1}, {1, 0}, p3));  // a * b != b * a
  CHECK(commutes({1, 0}, {2, 0}, p3));        // powers of b commute
}

TEST_CASE("parse and format round trip") {
  for (const char* s : {"a^5", "b^2", "b^2*a^-5", "a^0", "a^-123456789012345678901",
                        "b^64*a^1"}) {
    MonoidElement e = parse_element(s);
    CHECK(format_element(e) == s);
    CHECK(parse_element(format_element(e)) == e);
  }
  CHECK(parse_element("b^0*a^7") == MonoidElement{0, 7});
  CHECK(format_element({0, 7}) == "a^7");
  CHECK(format_element({2, 0}) == "b^2");
  CHECK(format_element({0, 0}) == "a^0");
  CHECK(format_element({1, -3}) == "b^1*a^-3");
}

TEST_CASE("parse rejects malformed input with byte offsets") {
  CHECK_THROWS_AS(parse_element("b^-1*a^0"), std::domain_error);
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_element("c^2"), ParseError);
  CHECK_THROWS_AS(parse_element("b^2*"), ParseError);
  CHECK_THROWS_AS(parse_element("a^"), ParseError);
  CHECK_THROWS_AS(parse_element("a^1 junk"), ParseError);
  try {
    parse_element("a^1x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }
  try {
    parse_element("b^2*c^1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("group params reject degenerate bases") {
  CHECK_THROWS_AS(GroupParams(1), std::domain_error);
  CHECK_THROWS_AS(GroupParams(0), std::domain_error);
  CHECK(GroupParams(2).n() == 2);
}
