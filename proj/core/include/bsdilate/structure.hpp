#pragma once

#include <json.hpp>
#include <map>
#include <span>
#include <string>

#include "bsdilate/intset.hpp"

namespace bsd {

/// Structural diagnostics of one IntSet: length l(A), gcd of differences
/// d(A), holes h_A, the normal form A* = (A - min A)/d with its length, and
/// residue-class counts c_m(A) for requested moduli. Singleton convention:
/// d = 0, A* = {0}, l* = 0.
struct StructureReport {
  BigInt length = 0;
  BigInt gcd_diffs = 0;
  BigInt holes = 0;
  IntSet normalized;
  BigInt normalized_length = 0;
  std::map<long long, std::size_t> classes;
  BigInt min_ap_size = 1;
};

StructureReport analyze(const IntSet& A, std::span<const long long> moduli);

/// Number of distinct residue classes of A modulo m (m >= 1).
std::size_t residue_classes(const IntSet& A, long long m);

/// Size of the smallest arithmetic progression containing A:
/// l(A)/d(A) + 1, and 1 for a singleton.
BigInt min_ap_size(const IntSet& A);

/// The lexicographically smaller of normalize(A) and normalize(reflect(A)),
/// where normalize(X) = (X - min X)/d(X) and reflect(X) = {max X - x}.
/// Idempotent; two sets are affine-equivalent iff their canonical forms agree
/// (reflections count: u may be negative).
IntSet canonical_form(const IntSet& A);

enum class ExtremalTag { Type013, Type014, UnionType, None };

/// Classification of the |A + 3.A| = 4|A| - 4 equality sets: affine images of
/// {0,1,3}, {0,1,4}, or 3.{0..n} u (3.{0..n}+1). When matched, witness (u,v)
/// maps the canonical model onto A exactly.
struct ExtremalClass {
  ExtremalTag tag = ExtremalTag::None;
  long long union_n = 0;  // the n of the union family, when tag == UnionType
  BigInt witness_u = 0;
  BigInt witness_v = 0;

  friend bool operator==(const ExtremalClass&, const ExtremalClass&) = default;
};

/// Requires |A| >= 3.
ExtremalClass classify_extremal(const IntSet& A);

std::string extremal_tag_name(ExtremalTag tag);

nlohmann::json to_json(const StructureReport& r);

}  // namespace bsd
