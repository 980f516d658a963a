#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bsdilate/intset.hpp"

namespace bsd {

/// Fixed-window bit-vector over the value range [0, bits). Sumsets reduce to
/// shift-or accumulation, the hot path of the exhaustive scans. The vector
/// kernel in intset.hpp is the reference; equivalence is a tested invariant.
class BitWindow {
 public:
  explicit BitWindow(std::size_t bits);

  std::size_t bits() const { return bits_; }
  void set(std::size_t v);
  bool test(std::size_t v) const;
  std::size_t count() const;

  /// this |= (src << shift). Requires src's highest set bit + shift < bits().
  void or_shifted(const BitWindow& src, std::size_t shift);

  IntSet to_intset() const;

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

/// {r*a + s*b} over the bit kernel. Returns nullopt when any value of r*A or
/// s*B or their sums falls outside [0, bits) — callers fall back to the
/// vector kernel.
std::optional<IntSet> dilate_sum_bits(long long r, const IntSet& A,
                                      long long s, const IntSet& B,
                                      std::size_t bits);

std::optional<std::size_t> dilate_sum_size_bits(long long r, const IntSet& A,
                                                long long s, const IntSet& B,
                                                std::size_t bits);

}  // namespace bsd
