#include "bsdilate/structure.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace bsd {

namespace {

BigInt gcd_diffs(const IntSet& A) {
  if (A.size() < 2) return 0;
  BigInt g = 0;
  const auto& v = A.values();
  for (std::size_t i = 1; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, v[i] - v[0]);
  return g;
}

IntSet normalize(const IntSet& A) {
  if (A.size() == 1) return IntSet::from_values(std::vector<BigInt>{0});
  BigInt d = gcd_diffs(A);
  std::vector<BigInt> out;
  out.reserve(A.size());
  for (const auto& a : A.values()) out.push_back((a - A.min()) / d);
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet reflect(const IntSet& A) {
  std::vector<BigInt> out;
  out.reserve(A.size());
  for (auto it = A.values().rbegin(); it != A.values().rend(); ++it)
    out.push_back(A.max() - *it);
  return IntSet::from_sorted_unique(std::move(out));
}

nlohmann::json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return nlohmann::json(v.convert_to<std::int64_t>());
  return nlohmann::json(v.str());
}

}  // namespace

std::size_t residue_classes(const IntSet& A, long long m) {
  if (m < 1) throw std::domain_error("residue_classes: modulus must be >= 1");
  std::set<BigInt> residues;
  for (const auto& a : A.values()) {
    BigInt r = a % m;
    if (r < 0) r += m;
    residues.insert(r);
  }
  return residues.size();
}

BigInt min_ap_size(const IntSet& A) {
  if (A.empty()) throw std::domain_error("min_ap_size: empty set");
  if (A.size() == 1) return 1;
  return (A.max() - A.min()) / gcd_diffs(A) + 1;
}

StructureReport analyze(const IntSet& A, std::span<const long long> moduli) {
  if (A.empty()) throw std::domain_error("analyze: empty set");
  StructureReport r;
  r.length = A.max() - A.min();
  r.gcd_diffs = gcd_diffs(A);
  r.holes = r.length + 1 - static_cast<long long>(A.size());
  r.normalized = normalize(A);
  r.normalized_length = r.normalized.size() == 1
                            ? BigInt(0)
                            : BigInt(r.normalized.max() - r.normalized.min());
  for (long long m : moduli) r.classes[m] = residue_classes(A, m);
  r.min_ap_size = min_ap_size(A);
  return r;
}

IntSet canonical_form(const IntSet& A) {
  if (A.empty()) throw std::domain_error("canonical_form: empty set");
  IntSet fwd = normalize(A);
  IntSet bwd = normalize(reflect(A));
  return bwd < fwd ? bwd : fwd;
}

namespace {

// Matches 3.{0..n} u (3.{0..n}+1), n >= 1: values {0,1,3,4,...,3n,3n+1}.
long long union_family_index(const IntSet& C) {
  if (C.size() < 4 || C.size() % 2 != 0) return -1;
  const auto& v = C.values();
  long long nn = static_cast<long long>(C.size()) / 2 - 1;
  for (long long j = 0; j <= nn; ++j) {
    if (v[2 * j] != 3 * j || v[2 * j + 1] != 3 * j + 1) return -1;
  }
  return nn;
}

}  // namespace

ExtremalClass classify_extremal(const IntSet& A) {
  if (A.size() < 3)
    throw std::domain_error("classify_extremal: |A| must be >= 3");
  IntSet C = canonical_form(A);
  ExtremalClass cls;
  if (C == IntSet::from_values(std::vector<long long>{0, 1, 3})) {
    cls.tag = ExtremalTag::Type013;
  } else if (C == IntSet::from_values(std::vector<long long>{0, 1, 4})) {
    cls.tag = ExtremalTag::Type014;
  } else if (long long nn = union_family_index(C); nn >= 0) {
    cls.tag = ExtremalTag::UnionType;
    cls.union_n = nn;
  } else {
    return cls;
  }
  BigInt d = gcd_diffs(A);
  if (normalize(A) == C) {
    cls.witness_u = d;
    cls.witness_v = A.min();
  } else {
    cls.witness_u = -d;
    cls.witness_v = A.max();
  }
  assert(affine_image(C, cls.witness_u, cls.witness_v) == A);
  return cls;
}

std::string extremal_tag_name(ExtremalTag tag) {
  switch (tag) {
    case ExtremalTag::Type013: return "Type013";
    case ExtremalTag::Type014: return "Type014";
    case ExtremalTag::UnionType: return "UnionType";
    case ExtremalTag::None: return "None";
  }
  return "None";
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& [m, c] : r.classes) classes[std::to_string(m)] = c;
  nlohmann::json norm = nlohmann::json::array();
  for (const auto& v : r.normalized.values()) norm.push_back(big_to_json(v));
  return {{"length", big_to_json(r.length)},
          {"gcd_diffs", big_to_json(r.gcd_diffs)},
          {"holes", big_to_json(r.holes)},
          {"normalized", norm},
          {"normalized_length", big_to_json(r.normalized_length)},
          {"classes", classes},
          {"min_ap_size", big_to_json(r.min_ap_size)}};
}

}  // namespace bsd
