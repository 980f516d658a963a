#include "bsdilate/theorems.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace bsd {

namespace {

constexpr std::array<std::pair<TheoremId, const char*>, 15> kNames = {{
    {TheoremId::BS12_Direct, "bs12-direct"},
    {TheoremId::BS12_Inverse, "bs12-inverse"},
    {TheoremId::Thm1_3, "thm1.3"},
    {TheoremId::LSS_1, "lss-1"},
    {TheoremId::LSS_2, "lss-2"},
    {TheoremId::Thm1_5, "thm1.5"},
    {TheoremId::Cor1_6, "cor1.6"},
    {TheoremId::Thm3_Direct, "thm3-direct"},
    {TheoremId::Thm3_Inverse, "thm3-inverse"},
    {TheoremId::Lemma2_1a, "lemma2.1a"},
    {TheoremId::Lemma2_1b, "lemma2.1b"},
    {TheoremId::Lemma2_2a, "lemma2.2a"},
    {TheoremId::Lemma2_2b, "lemma2.2b"},
    {TheoremId::Lemma2_3, "lemma2.3"},
    {TheoremId::Lemma2_4, "lemma2.4"},
}};

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

long long card(const IntSet& A) { return static_cast<long long>(A.size()); }

long long square_size(const MonoidSet& S) {
  return static_cast<long long>(square(S).size());
}

}  // namespace

std::string theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kNames)
    if (tid == id) return name;
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (const auto& [tid, n] : kNames)
    if (name == n) return tid;
  return std::nullopt;
}

BoundVerdict verify_cor1(const IntSet& A, long long r) {
  if (A.empty()) throw std::domain_error("verify_cor1: empty set");
  BoundVerdict v;
  v.id = TheoremId::Cor1_6;
  v.input = format_intset(A) + ", r=" + std::to_string(r);
  long long k = card(A);
  v.lhs = static_cast<long long>(dilate_sum(1, A, r, A).size());
  v.bound = std::max(4 * k - 4, 1LL);
  v.slack_h = v.lhs - v.bound.num;
  if (r < 3) {
    v.reason = "requires r >= 3";
    return v;
  }
  v.hypotheses_met = true;
  v.holds = v.lhs >= v.bound.num;
  v.boundary = v.lhs == v.bound.num;
  return v;
}

BoundVerdict verify_lss(const IntSet& A, const IntSet& B) {
  if (A.empty() || B.empty())
    throw std::domain_error("verify_lss: empty operand");
  BoundVerdict v;
  v.id = TheoremId::LSS_1;
  v.input = "A=" + format_intset(A) + ", B=" + format_intset(B);
  v.lhs = static_cast<long long>(sumset(A, B).size());
  if (!A.contains(0) || !B.contains(0)) {
    v.reason = "requires 0 in A and B";
    return v;
  }
  long long kA = card(A), kB = card(B);
  long long lA = to_ll(A.max() - A.min());
  long long lB = to_ll(B.max() - B.min());
  long long delta = lA == lB ? 1 : 0;
  bool dA1 = A.size() >= 2 && analyze(A, {}).gcd_diffs == 1;
  if (lA >= lB && lA >= kA + kB - 1 - delta && dA1) {
    v.id = TheoremId::LSS_1;
    v.reason = "branch 1: l(A) dominant, d(A)=1";
    v.bound = kA + 2 * kB - 2 - delta;
  } else if (std::max(lA, lB) <= kA + kB - 2 - delta) {
    // The bound adds the shorter set's cardinality to the longer set's
    // length; only a tie allows taking the larger of the two forms.
    v.id = TheoremId::LSS_2;
    v.reason = "branch 2: short sets";
    if (lA > lB)
      v.bound = lA + kB;
    else if (lB > lA)
      v.bound = lB + kA;
    else
      v.bound = std::max(lA + kB, lB + kA);
  } else {
    v.reason = "neither branch hypothesis holds";
    return v;
  }
  v.hypotheses_met = true;
  v.holds = v.lhs >= v.bound.num;
  v.boundary = v.lhs == v.bound.num;
  v.slack_h = v.lhs - v.bound.num;
  return v;
}

BoundVerdict verify_thm1(const IntSet& A) {
  if (A.empty() || !A.contains(0))
    throw std::domain_error("verify_thm1: requires 0 in A");
  if (A.size() < 2) throw std::domain_error("verify_thm1: requires |A| >= 2");
  BoundVerdict v;
  v.id = TheoremId::Thm1_3;
  v.input = format_intset(A);
  long long k = card(A);
  long long t = static_cast<long long>(residue_classes(A, 3));
  v.lhs = static_cast<long long>(dilate_sum(1, A, 3, A).size());
  long long h = v.lhs - ((t + 1) * k - t);
  v.slack_h = h;
  v.bound = (t + 2) * k - 2 * t;  // hypothesis threshold
  if (v.lhs > v.bound.num) {
    v.reason = "small-doubling hypothesis fails";
    return v;
  }
  v.hypotheses_met = true;
  v.boundary = v.lhs == v.bound.num;
  bool contained = min_ap_size(A) <= k + h;
  // The AP-containment claim can fail when the hypothesis is attained with
  // equality; strictly inside the hypothesis it is the hard invariant, at the
  // boundary a failure is flagged as an anomaly instead of a violation.
  v.holds = contained || v.boundary;
  v.reason = "t=" + std::to_string(t) + ", h=" + std::to_string(h);
  if (!contained)
    v.reason += "; containment fails at the hypothesis boundary";
  return v;
}

BoundVerdict verify_thm15(const IntSet& A) {
  if (A.empty()) throw std::domain_error("verify_thm15: empty set");
  BoundVerdict v;
  v.id = TheoremId::Thm1_5;
  v.input = format_intset(A);
  long long k = card(A);
  v.lhs = static_cast<long long>(dilate_sum(1, A, 3, A).size());
  v.bound = 4 * k - 4;
  v.slack_h = v.lhs - v.bound.num;
  if (k < 3) {
    v.reason = "classification needs |A| >= 3";
    return v;
  }
  v.hypotheses_met = true;
  bool equality = v.lhs == v.bound.num;
  ExtremalClass cls = classify_extremal(A);
  bool classified = cls.tag != ExtremalTag::None;
  v.holds = v.lhs >= v.bound.num && equality == classified;
  v.boundary = equality;
  v.reason = "class=" + extremal_tag_name(cls.tag);
  return v;
}

BoundVerdict verify_thm3_direct(const MonoidSet& S) {
  BoundVerdict v;
  v.id = TheoremId::Thm3_Direct;
  v.input = format_monoid_set(S);
  long long k = static_cast<long long>(S.size());
  v.bound = Rational(7 * k - 12, 2);
  if (S.params().n() != 3) {
    v.reason = "requires base n=3";
    return v;
  }
  v.lhs = square_size(S);
  if (k < 3) {
    v.reason = "requires k >= 3";
    return v;
  }
  if (S.slice_count() < 2) {
    v.reason = "requires t >= 1 (at least two cosets)";
    return v;
  }
  if (!is_nonabelian(S)) {
    v.reason = "requires a non-abelian set";
    return v;
  }
  v.hypotheses_met = true;
  v.holds = 2 * v.lhs >= 7 * k - 12;
  v.boundary = 2 * v.lhs == 7 * k - 12;
  return v;
}

BoundVerdict verify_thm3_inverse(const MonoidSet& S) {
  if (S.slice_count() != 1)
    throw std::domain_error("verify_thm3_inverse: requires single-slice S");
  BoundVerdict v;
  v.id = TheoremId::Thm3_Inverse;
  v.input = format_monoid_set(S);
  const IntSet& A = S.slices().front().second;
  long long k = card(A);
  v.bound = Rational(7 * k - 12, 2);
  if (S.params().n() != 3) {
    v.reason = "requires base n=3";
    return v;
  }
  v.lhs = square_size(S);
  long long t = static_cast<long long>(residue_classes(A, 3));
  long long h = v.lhs - ((t + 2) * k - 2 * t);
  v.slack_h = h;
  v.boundary = 2 * v.lhs == 7 * k - 12;
  if (!A.contains(0)) {
    v.reason = "requires 0 in A";
    return v;
  }
  if (2 * v.lhs >= 7 * k - 12) {
    v.reason = "small-doubling hypothesis fails (|S^2| >= 7k/2-6)";
    return v;
  }
  v.hypotheses_met = true;
  v.holds = min_ap_size(A) <= k + h &&
            2 * (k + h) < 5 * k - 2 * t * (k - 2) - 12;
  v.reason = "t=" + std::to_string(t) + ", h=" + std::to_string(h);
  return v;
}

BoundVerdict verify_bs12(const IntSet& A) {
  if (A.empty()) throw std::domain_error("verify_bs12: empty set");
  BoundVerdict v;
  v.id = TheoremId::BS12_Direct;
  v.input = format_intset(A);
  long long k = card(A);
  v.lhs = static_cast<long long>(dilate_sum(1, A, 2, A).size());
  v.bound = 3 * k - 2;
  v.slack_h = v.lhs - v.bound.num;
  v.hypotheses_met = true;
  v.holds = v.lhs >= v.bound.num;
  v.boundary = v.lhs == v.bound.num;
  return v;
}

BoundVerdict verify_bs12_inverse(const IntSet& A) {
  if (A.empty()) throw std::domain_error("verify_bs12: empty set");
  BoundVerdict v;
  v.id = TheoremId::BS12_Inverse;
  v.input = format_intset(A);
  long long k = card(A);
  v.lhs = static_cast<long long>(dilate_sum(1, A, 2, A).size());
  long long h = v.lhs - (3 * k - 2);
  v.slack_h = h;
  v.bound = Rational(7 * k - 8, 2);
  v.boundary = 2 * v.lhs == 7 * k - 8;
  if (2 * v.lhs >= 7 * k - 8) {
    v.reason = "small-doubling hypothesis fails (|A+2A| >= 7k/2-4)";
    return v;
  }
  v.hypotheses_met = true;
  v.holds = min_ap_size(A) <= k + h && 2 * (k + h) < 3 * k - 4;
  v.reason = "h=" + std::to_string(h);
  return v;
}

std::vector<TheoremId> lemma_match(const MonoidSet& S) {
  std::vector<TheoremId> out;
  CosetProfile p = coset_profile(S);
  std::size_t t = p.slice_count - 1;
  long long k = static_cast<long long>(S.size());
  bool all_singleton = std::all_of(p.sizes.begin(), p.sizes.end(),
                                   [](std::size_t s) { return s == 1; });
  bool nonab = is_nonabelian(S);

  bool any_big = std::any_of(p.sizes.begin(), p.sizes.end(),
                             [](std::size_t s) { return s >= 2; });
  if (t >= 1 && any_big) out.push_back(TheoremId::Lemma2_1a);
  if (p.slice_count == 2 && k >= 4) out.push_back(TheoremId::Lemma2_1b);
  if (t >= 2 && p.sizes[0] >= 2 &&
      std::all_of(p.sizes.begin() + 1, p.sizes.end(),
                  [](std::size_t s) { return s == 1; }))
    out.push_back(TheoremId::Lemma2_2a);
  if (t >= 2 && p.sizes[t] >= 2 &&
      std::all_of(p.sizes.begin(), p.sizes.end() - 1,
                  [](std::size_t s) { return s == 1; }))
    out.push_back(TheoremId::Lemma2_2b);
  if (all_singleton && t >= 1 && p.exponents[0] == 0 && nonab) {
    // Tail T = S \ {s_0}; the lemma needs <T> abelian, i.e. T pairwise
    // commuting.
    auto elems = S.elements();
    bool tail_abelian = true;
    for (std::size_t i = 1; i < elems.size() && tail_abelian; ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (!commutes(elems[i], elems[j], S.params())) {
          tail_abelian = false;
          break;
        }
    if (tail_abelian) out.push_back(TheoremId::Lemma2_3);
  }
  if (all_singleton && k >= 2 && p.exponents[0] >= 1 && nonab)
    out.push_back(TheoremId::Lemma2_4);
  return out;
}

BoundVerdict verify_lemma(const MonoidSet& S, TheoremId id) {
  BoundVerdict v;
  v.id = id;
  v.input = format_monoid_set(S);
  long long k = static_cast<long long>(S.size());
  v.lhs = square_size(S);
  auto matched = lemma_match(S);
  if (std::find(matched.begin(), matched.end(), id) == matched.end()) {
    v.reason = "hypotheses of " + theorem_name(id) + " not matched";
    return v;
  }
  v.hypotheses_met = true;
  switch (id) {
    case TheoremId::Lemma2_1a:
      v.bound = 0;
      v.holds = is_nonabelian(S);
      v.reason = "non-abelian conclusion";
      return v;
    case TheoremId::Lemma2_1b:
    case TheoremId::Lemma2_2a:
    case TheoremId::Lemma2_2b:
      v.bound = Rational(7 * k - 12, 2);
      v.holds = 2 * v.lhs >= 7 * k - 12;
      v.boundary = 2 * v.lhs == 7 * k - 12;
      return v;
    case TheoremId::Lemma2_3:
    case TheoremId::Lemma2_4:
      v.bound = 4 * k - 4;
      v.holds = v.lhs >= v.bound.num;
      v.boundary = v.lhs == v.bound.num;
      v.slack_h = v.lhs - v.bound.num;
      return v;
    default:
      throw std::domain_error("verify_lemma: not a lemma id");
  }
}

nlohmann::json to_json(const BoundVerdict& v) {
  nlohmann::json j{{"theorem", theorem_name(v.id)},
                   {"hypotheses_met", v.hypotheses_met},
                   {"reason", v.reason},
                   {"lhs", v.lhs},
                   {"bound", {{"num", v.bound.num}, {"den", v.bound.den}}},
                   {"holds", v.holds},
                   {"boundary", v.boundary},
                   {"input", v.input}};
  if (v.slack_h)
    j["h"] = *v.slack_h;
  else
    j["h"] = nullptr;
  return j;
}

BoundVerdict verdict_from_json(const nlohmann::json& j) {
  BoundVerdict v;
  auto id = theorem_from_name(j.at("theorem").get<std::string>());
  if (!id) throw std::domain_error("unknown theorem id in JSON");
  v.id = *id;
  v.hypotheses_met = j.at("hypotheses_met").get<bool>();
  v.reason = j.at("reason").get<std::string>();
  v.lhs = j.at("lhs").get<long long>();
  v.bound = Rational(j.at("bound").at("num").get<long long>(),
                     j.at("bound").at("den").get<long long>());
  if (!j.at("h").is_null()) v.slack_h = j.at("h").get<long long>();
  v.holds = j.at("holds").get<bool>();
  v.boundary = j.at("boundary").get<bool>();
  v.input = j.at("input").get<std::string>();
  return v;
}

}  // namespace bsd
