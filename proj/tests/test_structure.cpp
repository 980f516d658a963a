#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsdilate/structure.hpp"

using namespace bsd;

namespace {

IntSet S(std::vector<long long> v) { return IntSet::from_values(v); }

}  // namespace

TEST_CASE("analyze frozen examples") {
  std::vector<long long> mod3{3};
  StructureReport r = analyze(S({0, 1, 3}), mod3);
  CHECK(r.length == 3);
  CHECK(r.gcd_diffs == 1);
  CHECK(r.holes == 1);
  CHECK(r.normalized == S({0, 1, 3}));
  CHECK(r.normalized_length == 3);
  CHECK(r.classes.at(3) == 2);
  CHECK(r.min_ap_size == 4);

  StructureReport r2 = analyze(S({0, 3, 9}), {});
  CHECK(r2.gcd_diffs == 3);
  CHECK(r2.normalized == S({0, 1, 3}));
  CHECK(r2.normalized_length == 3);

  StructureReport r3 = analyze(S({0, 1, 2}), mod3);
  CHECK(r3.holes == 0);
  CHECK(r3.classes.at(3) == 3);

  CHECK_THROWS_AS(analyze(IntSet(), {}), std::domain_error);
}

TEST_CASE("singleton conventions") {
  std::vector<long long> mod3{3};
  StructureReport r = analyze(S({7}), mod3);
  CHECK(r.length == 0);
  CHECK(r.gcd_diffs == 0);
  CHECK(r.holes == 0);
  CHECK(r.normalized == S({0}));
  CHECK(r.normalized_length == 0);
  CHECK(r.min_ap_size == 1);
  CHECK(min_ap_size(S({-42})) == 1);
  CHECK(canonical_form(S({9})) == S({0}));
}

TEST_CASE("residue_classes") {
  CHECK(residue_classes(S({0, 1, 3}), 3) == 2);
  CHECK(residue_classes(S({0, 3, 9}), 3) == 1);
  CHECK(residue_classes(S({-1, 2, 5}), 3) == 1);
  CHECK(residue_classes(S({0, 1, 2, 3}), 3) == 3);
  CHECK(residue_classes(S({0, 5}), 1) == 1);
  CHECK_THROWS_AS(residue_classes(S({0}), 0), std::domain_error);
}

TEST_CASE("min_ap_size examples and witness membership") {
  CHECK(min_ap_size(S({0, 2, 6})) == 4);
  CHECK(min_ap_size(S({0, 1, 2})) == 3);
  CHECK(min_ap_size(S({0, 1, 3})) == 4);
  // A is contained in the witnessing AP {min, min+d, ...} of that size
  for (auto A : {S({0, 2, 6}), S({-3, 1, 9}), S({5, 8, 14, 23})}) {
    StructureReport r = analyze(A, {});
    BigInt d = r.gcd_diffs;
    for (const auto& a : A.values()) {
      CHECK((a - A.min()) % d == 0);
      CHECK((a - A.min()) / d < min_ap_size(A));
    }
  }
}

TEST_CASE("canonical_form examples, idempotence") {
  CHECK(canonical_form(S({0, 3, 9})) == S({0, 1, 3}));
  CHECK(canonical_form(S({0, 2, 3})) == S({0, 1, 3}));
  CHECK(canonical_form(S({0, 1, 3})) == S({0, 1, 3}));
  CHECK(canonical_form(S({0, 3, 4})) == S({0, 1, 4}));
  IntSet c = canonical_form(S({-7, 1, 13}));
  CHECK(canonical_form(c) == c);
}

TEST_CASE("canonical_form is affine-invariant") {
  for (auto A : {S({0, 1, 3}), S({0, 1, 4}), S({0, 2, 5, 6}), S({1, 8}),
                 S({0, 1, 3, 4, 9})}) {
    IntSet c = canonical_form(A);
    for (long long u : {1, -1, 2, -2, 3, -3})
      for (long long v = -5; v <= 5; ++v)
        CHECK(canonical_form(affine_image(A, u, v)) == c);
  }
}

TEST_CASE("classify_extremal frozen examples") {
  CHECK(classify_extremal(S({0, 1, 3})).tag == ExtremalTag::Type013);
  CHECK(classify_extremal(S({0, 1, 4})).tag == ExtremalTag::Type014);
  ExtremalClass u = classify_extremal(S({0, 1, 3, 4}));
  CHECK(u.tag == ExtremalTag::UnionType);
  CHECK(u.union_n == 1);
  CHECK(classify_extremal(S({0, 1, 2})).tag == ExtremalTag::None);
  CHECK(classify_extremal(S({0, 1, 2, 3, 4})).tag == ExtremalTag::None);
  CHECK_THROWS_AS(classify_extremal(S({0, 1})), std::domain_error);
}

TEST_CASE("classification witness maps the model onto A") {
  for (auto A : {S({0, 1, 3}), S({0, 2, 3}), S({0, 3, 9}), S({1, 4, 13}),
                 S({0, 3, 4}), S({0, 1, 3, 4}), S({-1, 2, 8, 11})}) {
    ExtremalClass cls = classify_extremal(A);
    REQUIRE(cls.tag != ExtremalTag::None);
    IntSet model;
    if (cls.tag == ExtremalTag::Type013) model = S({0, 1, 3});
    if (cls.tag == ExtremalTag::Type014) model = S({0, 1, 4});
    if (cls.tag == ExtremalTag::UnionType) {
      std::vector<long long> vals;
      for (long long j = 0; j <= cls.union_n; ++j) {
        vals.push_back(3 * j);
        vals.push_back(3 * j + 1);
      }
      model = S(vals);
    }
    CHECK(affine_image(model, cls.witness_u, cls.witness_v) == A);
  }
}

TEST_CASE("Type013 and Type014 are distinct canonical classes") {
  CHECK(canonical_form(S({0, 1, 3})) != canonical_form(S({0, 1, 4})));
  CHECK(classify_extremal(affine_image(S({0, 1, 3}), -2, 11)).tag ==
        ExtremalTag::Type013);
  CHECK(classify_extremal(affine_image(S({0, 1, 4}), -2, 11)).tag ==
        ExtremalTag::Type014);
}

TEST_CASE("union family members of larger n") {
  ExtremalClass c = classify_extremal(S({0, 1, 3, 4, 6, 7}));
  CHECK(c.tag == ExtremalTag::UnionType);
  CHECK(c.union_n == 2);
  // reflected and dilated image still classifies
  ExtremalClass c2 =
      classify_extremal(affine_image(S({0, 1, 3, 4, 6, 7}), -3, 0));
  CHECK(c2.tag == ExtremalTag::UnionType);
  CHECK(c2.union_n == 2);
}

TEST_CASE("structure report serializes to JSON") {
  std::vector<long long> mod3{3};
  StructureReport r = analyze(S({0, 2, 6}), mod3);
  nlohmann::json j = to_json(r);
  CHECK(j["length"] == 6);
  CHECK(j["gcd_diffs"] == 2);
  CHECK(j["holes"] == 4);
  CHECK(j["min_ap_size"] == 4);
  CHECK(j["classes"]["3"] == 2);
}
