#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bsdilate/intset.hpp"
#include "bsdilate/monoid_set.hpp"
#include "bsdilate/structure.hpp"

namespace bsd {

enum class TheoremId {
  BS12_Direct,
  BS12_Inverse,
  Thm1_3,
  LSS_1,
  LSS_2,
  Thm1_5,
  Cor1_6,
  Thm3_Direct,
  Thm3_Inverse,
  Lemma2_1a,
  Lemma2_1b,
  Lemma2_2a,
  Lemma2_2b,
  Lemma2_3,
  Lemma2_4,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// One bound evaluation on a concrete input. All comparisons against
/// fractional bounds are exact rational arithmetic; `holds` is meaningful
/// only when hypotheses_met. `boundary` marks the bound or hypothesis
/// attained with equality.
struct BoundVerdict {
  TheoremId id = TheoremId::Cor1_6;
  bool hypotheses_met = false;
  std::string reason;
  long long lhs = 0;
  Rational bound;
  std::optional<long long> slack_h;
  bool holds = false;
  bool boundary = false;
  std::string input;

  friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

/// |A + r.A| >= max(4k-4, 1) for r >= 3 (and >= 3k-2 as a consequence).
BoundVerdict verify_cor1(const IntSet& A, long long r);

/// Lev-Smeliansky-type bound: requires 0 in A n B; returns the verdict of
/// whichever branch hypothesis applies (LSS_1 or LSS_2), hypotheses_met=false
/// when neither does.
BoundVerdict verify_lss(const IntSet& A, const IntSet& B);

/// Inverse statement for A + 3.A with t = c_3(A): when
/// |A+3.A| <= (t+2)k - 2t, A lies in an AP of size k + h where
/// h = |A+3.A| - ((t+1)k - t). Requires 0 in A and |A| >= 2.
BoundVerdict verify_thm1(const IntSet& A);

/// |A + 3.A| >= 4k-4, with equality iff classify_extremal matches; holds
/// records that the biconditional is respected on this input.
BoundVerdict verify_thm15(const IntSet& A);

/// Main direct bound in BS+(1,3): non-abelian, >= 2 cosets, k >= 3 implies
/// |S^2| >= 7k/2 - 6.
BoundVerdict verify_thm3_direct(const MonoidSet& S);

/// Inverse statement for single-slice S = b^r a^A with 0 in A: when
/// |S^2| < 7k/2 - 6, A lies in an AP of size k+h < 5k/2 - t(k-2) - 6.
/// Throws std::domain_error on multi-slice input.
BoundVerdict verify_thm3_inverse(const MonoidSet& S);

/// BS(1,2) direct bound: |A + 2.A| >= 3k - 2.
BoundVerdict verify_bs12(const IntSet& A);

/// BS(1,2) inverse part: when |A + 2.A| = (3k-2)+h < 7k/2 - 4, A lies in an
/// AP of size k+h < 3k/2 - 2.
BoundVerdict verify_bs12_inverse(const IntSet& A);

/// Every Lemma 2.1-2.4 whose hypotheses S satisfies, in enum order.
std::vector<TheoremId> lemma_match(const MonoidSet& S);

/// Evaluates the matched lemma's bound (7k/2-6 for 2.1b/2.2a/2.2b, 4k-4 for
/// 2.3/2.4; 2.1a checks the non-abelian conclusion). Unmatched id gives
/// hypotheses_met=false.
BoundVerdict verify_lemma(const MonoidSet& S, TheoremId id);

nlohmann::json to_json(const BoundVerdict& v);
BoundVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace bsd
