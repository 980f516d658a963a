#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsdilate/bitwindow.hpp"
#include "bsdilate/intset.hpp"

using namespace bsd;

namespace {

IntSet S(std::vector<long long> v) { return IntSet::from_values(v); }

IntSet rand_set(std::mt19937_64& rng, std::size_t max_k, long long span) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k);
  std::uniform_int_distribution<long long> vd(-span, span);
  std::size_t k = kd(rng);
  std::vector<long long> vals;
  for (std::size_t i = 0; i < k; ++i) vals.push_back(vd(rng));
  return IntSet::from_values(vals);
}

IntSet brute_dilate_sum(const BigInt& r, const IntSet& A, const BigInt& s,
                        const IntSet& B) {
  std::vector<BigInt> out;
  for (const auto& a : A.values())
    for (const auto& b : B.values()) out.push_back(r * a + s * b);
  return IntSet::from_values(out);
}

}  // namespace

TEST_CASE("construction sorts and deduplicates") {
  IntSet a = S({3, 1, 0, 3, 1});
  CHECK(a == S({0, 1, 3}));
  CHECK(a.size() == 3);
  CHECK(a.min() == 0);
  CHECK(a.max() == 3);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(2));
  CHECK(IntSet().empty());
}

TEST_CASE("sumset frozen examples") {
  CHECK(sumset(S({0}), S({4, 7})) == S({4, 7}));
  CHECK(sumset(S({0, 1, 2}), S({0, 1, 2})) == S({0, 1, 2, 3, 4}));
  IntSet r = sumset(S({0, 1, 2, 5}), S({0, 1}));
  CHECK(r == S({0, 1, 2, 3, 5, 6}));
  CHECK(r.size() == 6);
  CHECK_THROWS_AS(sumset(IntSet(), S({0})), std::domain_error);
}

TEST_CASE("dilate frozen examples") {
  CHECK(dilate(3, S({0, 1, 3})) == S({0, 3, 9}));
  CHECK(dilate(1, S({-2, 5})) == S({-2, 5}));
  CHECK(dilate(0, S({1, 2, 3})) == S({0}));
  CHECK(dilate(-2, S({0, 1, 3})) == S({-6, -2, 0}));
  CHECK(dilate(-1, S({0, 1, 3})).size() == 3);
}

TEST_CASE("dilate_sum frozen equality cases") {
  IntSet a = dilate_sum(1, S({0, 1, 3}), 3, S({0, 1, 3}));
  CHECK(a == S({0, 1, 3, 4, 6, 9, 10, 12}));
  CHECK(a.size() == 8);
  CHECK(dilate_sum(1, S({0, 1, 4}), 3, S({0, 1, 4})).size() == 8);
  CHECK(dilate_sum(1, S({0, 1, 3, 4}), 3, S({0, 1, 3, 4})).size() == 12);
}

TEST_CASE("affine_image examples and errors") {
  CHECK(affine_image(S({0, 1, 3}), 3, 0) == S({0, 3, 9}));
  CHECK(affine_image(S({0, 1, 3}), -1, 3) == S({0, 2, 3}));
  CHECK(affine_image(S({0, 1, 3}), 1, 0) == S({0, 1, 3}));
  CHECK_THROWS_AS(affine_image(S({0, 1}), 0, 5), std::domain_error);
}

TEST_CASE("set_union") {
  CHECK(set_union(S({0, 2}), S({1, 2, 5})) == S({0, 1, 2, 5}));
}

TEST_CASE("sumset is commutative and associative; dilate_sum is definitional") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    IntSet A = rand_set(rng, 6, 30), B = rand_set(rng, 6, 30),
           C = rand_set(rng, 4, 30);
    CHECK(sumset(A, B) == sumset(B, A));
    CHECK(sumset(sumset(A, B), C) == sumset(A, sumset(B, C)));
    CHECK(dilate_sum(3, A, -2, B) == sumset(dilate(3, A), dilate(-2, B)));
    CHECK(dilate_sum(3, A, -2, B) == brute_dilate_sum(3, A, -2, B));
    std::size_t s = sumset(A, B).size();
    CHECK(s >= A.size() + B.size() - 1);
    CHECK(s <= A.size() * B.size());
  }
}

TEST_CASE("|A + n.A| is affine-invariant") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    IntSet A = rand_set(rng, 6, 20);
    std::size_t base = dilate_sum(1, A, 3, A).size();
    for (long long u : {1, -1, 2, -3})
      for (long long v : {-5, 0, 7}) {
        IntSet img = affine_image(A, u, v);
        CHECK(dilate_sum(1, img, 3, img).size() == base);
      }
  }
}

TEST_CASE("bit kernel agrees with vector kernel") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    std::uniform_int_distribution<std::size_t> kd(1, 7);
    std::uniform_int_distribution<long long> vd(0, 40);
    std::vector<long long> av, bv;
    for (std::size_t j = 0; j < kd(rng); ++j) av.push_back(vd(rng));
    for (std::size_t j = 0; j < kd(rng); ++j) bv.push_back(vd(rng));
    IntSet A = S(av), B = S(bv);
    auto fast = dilate_sum_bits(1, A, 3, B, 4 * 40 + 2);
    REQUIRE(fast.has_value());
    CHECK(*fast == dilate_sum(1, A, 3, B));
    auto sz = dilate_sum_size_bits(1, A, 3, B, 4 * 40 + 2);
    REQUIRE(sz.has_value());
    CHECK(*sz == fast->size());
  }
}

TEST_CASE("bit kernel declines out-of-window input") {
  CHECK_FALSE(dilate_sum_bits(1, S({-1, 0}), 3, S({0, 1}), 64).has_value());
  CHECK_FALSE(dilate_sum_bits(1, S({0, 30}), 3, S({0, 30}), 64).has_value());
  CHECK(dilate_sum_bits(1, S({0, 10}), 3, S({0, 10}), 64).has_value());
}

TEST_CASE("BitWindow primitive operations") {
  BitWindow w(130);
  w.set(0);
  w.set(64);
  w.set(129);
  CHECK(w.count() == 3);
  CHECK(w.test(64));
  CHECK_FALSE(w.test(63));
  BitWindow v(130);
  v.set(1);
  w.or_shifted(v, 3);
  CHECK(w.test(4));
  CHECK(w.to_intset() == S({0, 4, 64, 129}));
  CHECK_THROWS_AS(BitWindow(0), CapacityError);
}

TEST_CASE("intset parsing grammars") {
  CHECK(parse_intset("{0,1,3}") == S({0, 1, 3}));
  CHECK(parse_intset("{ 3 , -1, 0 }") == S({-1, 0, 3}));
  CHECK(parse_intset("3*[0..4]+1") == S({1, 4, 7, 10, 13}));
  CHECK(parse_intset("[0..3]") == S({0, 1, 2, 3}));
  CHECK(parse_intset("2*[1..3]-1") == S({1, 3, 5}));
  CHECK(format_intset(S({0, 1, 3})) == "{0,1,3}");
  CHECK(parse_intset(format_intset(S({-4, 0, 9}))) == S({-4, 0, 9}));
  CHECK_THROWS_AS(parse_intset("{0,1"), ParseError);
  CHECK_THROWS_AS(parse_intset("{}"), ParseError);
  CHECK_THROWS_AS(parse_intset("{0,,1}"), ParseError);
}
