#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bsdilate/bigint.hpp"

namespace bsd {

/// Finite set of integers, stored strictly increasing. The empty value exists
/// but most kernels reject it.
class IntSet {
 public:
  IntSet() = default;

  /// Sorts and deduplicates.
  static IntSet from_values(std::vector<BigInt> vals);
  static IntSet from_values(const std::vector<long long>& vals);

  /// Trusts the caller: input must already be strictly increasing.
  static IntSet from_sorted_unique(std::vector<BigInt> vals);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<BigInt>& values() const { return elems_; }
  const BigInt& min() const { return elems_.front(); }
  const BigInt& max() const { return elems_.back(); }
  bool contains(const BigInt& v) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Lexicographic on the increasing element sequence.
  friend bool operator<(const IntSet& a, const IntSet& b) {
    return a.elems_ < b.elems_;
  }

 private:
  std::vector<BigInt> elems_;
};

/// {a+b : a in A, b in B}, by k-way merge of translated copies.
/// Throws std::domain_error on an empty operand.
IntSet sumset(const IntSet& A, const IntSet& B);

/// {r*a : a in A}.
IntSet dilate(const BigInt& r, const IntSet& A);

/// {r*a + s*b : a in A, b in B}.
IntSet dilate_sum(const BigInt& r, const IntSet& A, const BigInt& s,
                  const IntSet& B);

/// {u*a + v : a in A}; u must be nonzero.
IntSet affine_image(const IntSet& A, const BigInt& u, const BigInt& v);

IntSet set_union(const IntSet& A, const IntSet& B);

/// Accepts "{0,1,3}" (comma list, optional whitespace) or the affine-interval
/// shorthand "3*[0..4]+1" (coefficient and offset optional).
IntSet parse_intset(std::string_view text);

std::string format_intset(const IntSet& A);

}  // namespace bsd
