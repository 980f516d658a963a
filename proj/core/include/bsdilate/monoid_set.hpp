#pragma once

#include <json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsdilate/element.hpp"
#include "bsdilate/intset.hpp"

namespace bsd {

/// Finite subset of BS+(1,n) stored as its coset decomposition
/// S = S_0 u ... u S_t, S_i = b^{m_i} a^{A_i}, with m_0 < m_1 < ... < m_t
/// and every slice non-empty.
class MonoidSet {
 public:
  using Slice = std::pair<unsigned, IntSet>;

  MonoidSet(GroupParams params, std::vector<Slice> slices);

  static MonoidSet from_elements(std::span<const MonoidElement> elems,
                                 GroupParams params);

  const GroupParams& params() const { return params_; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t slice_count() const { return slices_.size(); }
  /// k = sum of slice sizes.
  std::size_t size() const;

  std::vector<MonoidElement> elements() const;

  friend bool operator==(const MonoidSet&, const MonoidSet&) = default;

 private:
  GroupParams params_;
  std::vector<Slice> slices_;
};

/// {s*t : s in S, t in T}, computed blockwise: the slice pair (m_i, m_j)
/// contributes n^{m_j}.A_i + B_j at output key m_i + m_j, unioned across
/// colliding keys. Throws std::domain_error on a parameter mismatch.
MonoidSet product_set(const MonoidSet& S, const MonoidSet& T);

/// Elementwise brute force over all ordered pairs; test oracle for
/// product_set, not a performance path.
MonoidSet product_set_elementwise(const MonoidSet& S, const MonoidSet& T);

MonoidSet square(const MonoidSet& S);

/// True iff some ordered pair of elements fails to commute; pairwise
/// commuting generators generate an abelian subgroup, so this is exact.
bool is_nonabelian(const MonoidSet& S);

struct CosetProfile {
  std::size_t slice_count = 0;          // t + 1
  std::vector<std::size_t> sizes;       // k_0 .. k_t
  std::vector<unsigned> exponents;      // m_0 .. m_t
};

CosetProfile coset_profile(const MonoidSet& S);

/// Literal grammar: "{b^0*a^0, b^0*a^1, b^1*a^0}" (element grammar per
/// parse_element, comma separated).
MonoidSet parse_monoid_set(std::string_view text, GroupParams params);

std::string format_monoid_set(const MonoidSet& S);

/// JSON form: {"n":3, "slices":[{"m":0,"A":[0,1]},{"m":1,"A":[0]}]}.
nlohmann::json to_json(const MonoidSet& S);
MonoidSet monoid_set_from_json(const nlohmann::json& j);

}  // namespace bsd
