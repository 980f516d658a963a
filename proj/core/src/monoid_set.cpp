#include "bsdilate/monoid_set.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace bsd {

MonoidSet::MonoidSet(GroupParams params, std::vector<Slice> slices)
    : params_(params), slices_(std::move(slices)) {
  if (slices_.empty()) throw std::domain_error("MonoidSet: no slices");
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (slices_[i].second.empty())
      throw std::domain_error("MonoidSet: empty slice");
    if (i > 0 && slices_[i - 1].first >= slices_[i].first)
      throw std::domain_error("MonoidSet: b-exponents not strictly increasing");
    if (slices_[i].first > kBExponentCap)
      throw std::overflow_error("MonoidSet: b-exponent exceeds cap");
  }
}

MonoidSet MonoidSet::from_elements(std::span<const MonoidElement> elems,
                                   GroupParams params) {
  if (elems.empty()) throw std::domain_error("from_elements: empty list");
  std::map<unsigned, std::vector<BigInt>> grouped;
  for (const auto& e : elems) grouped[e.m].push_back(e.x);
  std::vector<Slice> slices;
  slices.reserve(grouped.size());
  for (auto& [m, xs] : grouped)
    slices.emplace_back(m, IntSet::from_values(std::move(xs)));
  return MonoidSet(params, std::move(slices));
}

std::size_t MonoidSet::size() const {
  std::size_t k = 0;
  for (const auto& [m, a] : slices_) k += a.size();
  return k;
}

std::vector<MonoidElement> MonoidSet::elements() const {
  std::vector<MonoidElement> out;
  out.reserve(size());
  for (const auto& [m, a] : slices_)
    for (const auto& x : a.values()) out.push_back({m, x});
  return out;
}

MonoidSet product_set(const MonoidSet& S, const MonoidSet& T) {
  if (!(S.params() == T.params()))
    throw std::domain_error("product_set: group parameter mismatch");
  const unsigned n = S.params().n();
  std::map<unsigned, IntSet> acc;
  for (const auto& [mi, Ai] : S.slices()) {
    for (const auto& [mj, Bj] : T.slices()) {
      if (mi > kBExponentCap - mj)
        throw std::overflow_error("product_set: b-exponent exceeds cap");
      unsigned key = mi + mj;
      IntSet block = dilate_sum(pow_int(n, mj), Ai, 1, Bj);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::move(block));
      else
        it->second = set_union(it->second, block);
    }
  }
  std::vector<MonoidSet::Slice> slices(acc.begin(), acc.end());
  return MonoidSet(S.params(), std::move(slices));
}

MonoidSet product_set_elementwise(const MonoidSet& S, const MonoidSet& T) {
  if (!(S.params() == T.params()))
    throw std::domain_error("product_set: group parameter mismatch");
  std::vector<MonoidElement> prods;
  for (const auto& s : S.elements())
    for (const auto& t : T.elements())
      prods.push_back(multiply(s, t, S.params()));
  return MonoidSet::from_elements(prods, S.params());
}

MonoidSet square(const MonoidSet& S) { return product_set(S, S); }

bool is_nonabelian(const MonoidSet& S) {
  auto elems = S.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!commutes(elems[i], elems[j], S.params())) return true;
  return false;
}

CosetProfile coset_profile(const MonoidSet& S) {
  CosetProfile p;
  p.slice_count = S.slice_count();
  for (const auto& [m, a] : S.slices()) {
    p.sizes.push_back(a.size());
    p.exponents.push_back(m);
  }
  return p;
}

MonoidSet parse_monoid_set(std::string_view text, GroupParams params) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '{')
    throw ParseError("expected '{'", i);
  ++i;
  std::vector<MonoidElement> elems;
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != '}') ++i;
    if (i >= text.size()) throw ParseError("unterminated set literal", i);
    std::string_view tok = text.substr(start, i - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty element in set literal", start);
    try {
      elems.push_back(parse_element(tok));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.offset);
    }
    if (text[i] == '}') {
      ++i;
      break;
    }
    ++i;  // ','
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters", i);
  if (elems.empty()) throw std::domain_error("empty monoid set literal");
  return MonoidSet::from_elements(elems, params);
}

std::string format_monoid_set(const MonoidSet& S) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : S.elements()) {
    if (!first) out += ", ";
    first = false;
    out += format_element(e);
  }
  out += "}";
  return out;
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi)
    return nlohmann::json(v.convert_to<std::int64_t>());
  return nlohmann::json(v.str());
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json to_json(const MonoidSet& S) {
  nlohmann::json slices = nlohmann::json::array();
  for (const auto& [m, a] : S.slices()) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& x : a.values()) vals.push_back(big_to_json(x));
    slices.push_back({{"m", m}, {"A", vals}});
  }
  return {{"n", S.params().n()}, {"slices", slices}};
}

MonoidSet monoid_set_from_json(const nlohmann::json& j) {
  GroupParams params(j.at("n").get<unsigned>());
  std::vector<MonoidSet::Slice> slices;
  for (const auto& s : j.at("slices")) {
    std::vector<BigInt> vals;
    for (const auto& v : s.at("A")) vals.push_back(big_from_json(v));
    slices.emplace_back(s.at("m").get<unsigned>(),
                        IntSet::from_values(std::move(vals)));
  }
  return MonoidSet(params, std::move(slices));
}

}  // namespace bsd
