#include "bsdilate/intset.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <queue>
#include <tuple>

namespace bsd {

IntSet IntSet::from_values(std::vector<BigInt> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  IntSet s;
  s.elems_ = std::move(vals);
  return s;
}

IntSet IntSet::from_values(const std::vector<long long>& vals) {
  std::vector<BigInt> big(vals.begin(), vals.end());
  return from_values(std::move(big));
}

IntSet IntSet::from_sorted_unique(std::vector<BigInt> vals) {
  assert(std::is_sorted(vals.begin(), vals.end()) &&
         std::adjacent_find(vals.begin(), vals.end()) == vals.end());
  IntSet s;
  s.elems_ = std::move(vals);
  return s;
}

bool IntSet::contains(const BigInt& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

IntSet sumset(const IntSet& A, const IntSet& B) {
  if (A.empty() || B.empty()) throw std::domain_error("sumset: empty operand");
  const auto& a = A.values();
  const auto& b = B.values();

  // k-way merge of the translates A + b_j, one cursor per translate.
  using Entry = std::pair<BigInt, std::size_t>;  // (a_i + b_j, j); i in pos[j]
  auto cmp = [](const Entry& l, const Entry& r) { return l.first > r.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::vector<std::size_t> pos(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) heap.push({a[0] + b[j], j});

  std::vector<BigInt> out;
  out.reserve(a.size() + b.size() - 1);
  while (!heap.empty()) {
    auto [v, j] = heap.top();
    heap.pop();
    if (out.empty() || out.back() != v) out.push_back(std::move(v));
    if (++pos[j] < a.size()) heap.push({a[pos[j]] + b[j], j});
  }
  assert(out.size() >= a.size() + b.size() - 1);
  assert(out.size() <= a.size() * b.size());
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet dilate(const BigInt& r, const IntSet& A) {
  if (A.empty()) throw std::domain_error("dilate: empty operand");
  if (r == 0) return IntSet::from_values(std::vector<BigInt>{0});
  std::vector<BigInt> out;
  out.reserve(A.size());
  for (const auto& v : A.values()) out.push_back(r * v);
  if (r < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet dilate_sum(const BigInt& r, const IntSet& A, const BigInt& s,
                  const IntSet& B) {
  return sumset(dilate(r, A), dilate(s, B));
}

IntSet affine_image(const IntSet& A, const BigInt& u, const BigInt& v) {
  if (u == 0) throw std::domain_error("affine_image: u must be nonzero");
  if (A.empty()) throw std::domain_error("affine_image: empty operand");
  std::vector<BigInt> out;
  out.reserve(A.size());
  for (const auto& a : A.values()) out.push_back(u * a + v);
  if (u < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet set_union(const IntSet& A, const IntSet& B) {
  std::vector<BigInt> out;
  out.reserve(A.size() + B.size());
  std::set_union(A.values().begin(), A.values().end(), B.values().begin(),
                 B.values().end(), std::back_inserter(out));
  return IntSet::from_sorted_unique(std::move(out));
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

BigInt parse_int_at(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) throw ParseError("expected integer", start);
  BigInt v(std::string(s.substr(digits, i - digits)));
  return neg ? -v : v;
}

IntSet parse_affine_interval(std::string_view s, std::size_t& i) {
  // [c*] "[" lo ".." hi "]" [(+|-) v]
  BigInt coeff = 1;
  if (i < s.size() && s[i] != '[') {
    coeff = parse_int_at(s, i);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != '*')
      throw ParseError("expected '*' in affine shorthand", i);
    ++i;
    skip_ws(s, i);
  }
  if (i >= s.size() || s[i] != '[') throw ParseError("expected '['", i);
  ++i;
  BigInt lo = parse_int_at(s, i);
  if (i + 1 >= s.size() || s[i] != '.' || s[i + 1] != '.')
    throw ParseError("expected '..'", i);
  i += 2;
  BigInt hi = parse_int_at(s, i);
  if (i >= s.size() || s[i] != ']') throw ParseError("expected ']'", i);
  ++i;
  if (lo > hi) throw ParseError("empty interval", i);
  skip_ws(s, i);
  BigInt off = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) off = parse_int_at(s, i);
  std::vector<BigInt> vals;
  for (BigInt j = lo; j <= hi; ++j) vals.push_back(coeff * j + off);
  return IntSet::from_values(std::move(vals));
}

}  // namespace

IntSet parse_intset(std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  IntSet result;
  if (i < text.size() && text[i] == '{') {
    ++i;
    std::vector<BigInt> vals;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '}') {
      throw ParseError("empty set literal", i);
    } else {
      while (true) {
        skip_ws(text, i);
        vals.push_back(parse_int_at(text, i));
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == '}') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or '}'", i);
      }
    }
    result = IntSet::from_values(std::move(vals));
  } else {
    result = parse_affine_interval(text, i);
  }
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters", i);
  return result;
}

std::string format_intset(const IntSet& A) {
  std::string out = "{";
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (i) out += ",";
    out += A.values()[i].str();
  }
  out += "}";
  return out;
}

}  // namespace bsd
