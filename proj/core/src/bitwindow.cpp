#include "bsdilate/bitwindow.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace bsd {

BitWindow::BitWindow(std::size_t bits)
    : bits_(bits), words_((bits + 63) / 64, 0) {
  if (bits == 0) throw CapacityError("BitWindow: zero-width window");
}

void BitWindow::set(std::size_t v) {
  assert(v < bits_);
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

bool BitWindow::test(std::size_t v) const {
  if (v >= bits_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1;
}

std::size_t BitWindow::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void BitWindow::or_shifted(const BitWindow& src, std::size_t shift) {
  const std::size_t word_shift = shift >> 6;
  const unsigned bit_shift = shift & 63;
  for (std::size_t i = src.words_.size(); i-- > 0;) {
    std::uint64_t w = src.words_[i];
    if (w == 0) continue;
    std::size_t lo = i + word_shift;
    if (bit_shift == 0) {
      assert(lo < words_.size());
      words_[lo] |= w;
    } else {
      assert(lo < words_.size());
      words_[lo] |= w << bit_shift;
      std::uint64_t carry = w >> (64 - bit_shift);
      if (carry) {
        assert(lo + 1 < words_.size());
        words_[lo + 1] |= carry;
      }
    }
  }
}

IntSet BitWindow::to_intset() const {
  std::vector<BigInt> vals;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      unsigned b = static_cast<unsigned>(std::countr_zero(w));
      vals.push_back(BigInt(i * 64 + b));
      w &= w - 1;
    }
  }
  return IntSet::from_sorted_unique(std::move(vals));
}

namespace {

// Dilated values as machine ints, or nullopt when any falls outside [0, bits).
std::optional<std::vector<std::size_t>> fit_dilated(long long r,
                                                    const IntSet& A,
                                                    std::size_t bits) {
  std::vector<std::size_t> out;
  out.reserve(A.size());
  for (const auto& a : A.values()) {
    BigInt v = BigInt(r) * a;
    if (v < 0 || v >= bits) return std::nullopt;
    out.push_back(v.convert_to<std::size_t>());
  }
  return out;
}

std::optional<BitWindow> dilate_sum_window(long long r, const IntSet& A,
                                           long long s, const IntSet& B,
                                           std::size_t bits) {
  if (A.empty() || B.empty())
    throw std::domain_error("dilate_sum_bits: empty operand");
  auto ra = fit_dilated(r, A, bits);
  auto sb = fit_dilated(s, B, bits);
  if (!ra || !sb) return std::nullopt;
  std::size_t max_ra = *std::max_element(ra->begin(), ra->end());
  std::size_t max_sb = *std::max_element(sb->begin(), sb->end());
  if (max_ra + max_sb >= bits) return std::nullopt;

  BitWindow base(bits);
  for (auto v : *ra) base.set(v);
  if (*sb == std::vector<std::size_t>{0}) return base;
  BitWindow acc(bits);
  for (auto v : *sb) acc.or_shifted(base, v);
  return acc;
}

}  // namespace

std::optional<IntSet> dilate_sum_bits(long long r, const IntSet& A,
                                      long long s, const IntSet& B,
                                      std::size_t bits) {
  auto w = dilate_sum_window(r, A, s, B, bits);
  if (!w) return std::nullopt;
  return w->to_intset();
}

std::optional<std::size_t> dilate_sum_size_bits(long long r, const IntSet& A,
                                                long long s, const IntSet& B,
                                                std::size_t bits) {
  auto w = dilate_sum_window(r, A, s, B, bits);
  if (!w) return std::nullopt;
  return w->count();
}

}  // namespace bsd
