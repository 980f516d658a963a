#include "bsdilate/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <numeric>
#include <random>
#include <thread>

#include "bsdilate/bitwindow.hpp"

namespace bsd {

namespace {

constexpr long long kMaxEnumWindow = 30;
constexpr long long kMaxSupportWindow = 16;
constexpr std::size_t kMaxListedCases = 1000;

struct Partial {
  unsigned long long scanned = 0;
  unsigned long long hyp = 0;
  unsigned long long boundary_total = 0;
  unsigned long long equality_total = 0;
  unsigned long long aux = 0;   // per-scan extra counter (e.g. anomalies)
  unsigned long long aux2 = 0;  // second per-scan counter
  std::vector<BoundVerdict> violations;
  std::vector<std::string> boundary;
  std::vector<std::string> equality;
  std::optional<Rational> min_slack;

  void note_slack(const Rational& s) {
    if (!min_slack || s < *min_slack) min_slack = s;
  }
  void add_boundary(std::string s) {
    ++boundary_total;
    if (boundary.size() < kMaxListedCases) boundary.push_back(std::move(s));
  }
  void add_equality(std::string s) {
    ++equality_total;
    if (equality.size() < kMaxListedCases) equality.push_back(std::move(s));
  }
};

void merge(Partial& into, Partial&& p) {
  into.scanned += p.scanned;
  into.hyp += p.hyp;
  into.aux += p.aux;
  into.aux2 += p.aux2;
  into.boundary_total += p.boundary_total;
  into.equality_total += p.equality_total;
  for (auto& v : p.violations) into.violations.push_back(std::move(v));
  for (auto& s : p.boundary)
    if (into.boundary.size() < kMaxListedCases)
      into.boundary.push_back(std::move(s));
  for (auto& s : p.equality)
    if (into.equality.size() < kMaxListedCases)
      into.equality.push_back(std::move(s));
  if (p.min_slack) into.note_slack(*p.min_slack);
}

// Deterministic data parallelism: the item list is split into contiguous
// shards, shards run independently, partials merge in shard order.
template <typename Item, typename Fn>
Partial process_items(const std::vector<Item>& items, Fn fn) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || items.size() < 512) {
    Partial p;
    for (std::size_t i = 0; i < items.size(); ++i) fn(i, items[i], p);
    return p;
  }
  std::size_t chunk = (items.size() + threads - 1) / threads;
  std::vector<std::future<Partial>> futures;
  for (std::size_t lo = 0; lo < items.size(); lo += chunk) {
    std::size_t hi = std::min(items.size(), lo + chunk);
    futures.push_back(std::async(std::launch::async, [&items, lo, hi, fn] {
      Partial p;
      for (std::size_t i = lo; i < hi; ++i) fn(i, items[i], p);
      return p;
    }));
  }
  Partial out;
  for (auto& f : futures) merge(out, f.get());
  return out;
}

void finalize(ScanReport& rep, Partial&& p,
              std::chrono::steady_clock::time_point start) {
  rep.instances_scanned = p.scanned;
  rep.hypotheses_met_count = p.hyp;
  rep.violations = std::move(p.violations);
  rep.boundary_cases = std::move(p.boundary);
  rep.equality_cases = std::move(p.equality);
  rep.min_slack = p.min_slack;
  if (p.boundary_total > rep.boundary_cases.size())
    rep.notes.push_back("boundary list truncated; total=" +
                        std::to_string(p.boundary_total));
  if (p.equality_total > rep.equality_cases.size())
    rep.notes.push_back("equality list truncated; total=" +
                        std::to_string(p.equality_total));
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
}

long long gcd_diffs_ll(const std::vector<long long>& vals) {
  if (vals.size() < 2) return 0;
  long long g = 0;
  for (std::size_t i = 1; i < vals.size(); ++i)
    g = std::gcd(g, vals[i] - vals[0]);
  return g;
}

void enum_subsets(const SearchSpec& spec,
                  const std::function<void(const std::vector<long long>&)>& emit) {
  if (spec.window > kMaxEnumWindow)
    throw CapacityError("enumeration window exceeds capacity (" +
                        std::to_string(kMaxEnumWindow) + ")");
  std::vector<long long> cur;
  std::function<void(long long)> rec = [&](long long next) {
    if (cur.size() >= spec.k_min) emit(cur);
    if (cur.size() == spec.k_max) return;
    for (long long v = next; v <= spec.window; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  if (spec.require_zero) {
    cur.push_back(0);
    if (1 >= spec.k_min) emit(cur);
    if (spec.k_max > 1) {
      // continue from 1 under the fixed {0} prefix
      std::function<void(long long)> rec0 = [&](long long next) {
        for (long long v = next; v <= spec.window; ++v) {
          cur.push_back(v);
          if (cur.size() >= spec.k_min) emit(cur);
          if (cur.size() < spec.k_max) rec0(v + 1);
          cur.pop_back();
        }
      };
      rec0(1);
    }
  } else {
    rec(0);
  }
}

// Exact-size helper over the bit kernel with vector-kernel fallback and a
// sampled cross-check (every 100th call) of the two paths.
struct SumSizer {
  long long r;
  std::size_t bits;
  std::atomic<bool>* fallback;

  long long size(std::size_t idx, const IntSet& A, const IntSet& B) const {
    auto fast = dilate_sum_size_bits(1, A, r, B, bits);
    if (!fast) {
      if (fallback) fallback->store(true, std::memory_order_relaxed);
      return static_cast<long long>(dilate_sum(1, A, r, B).size());
    }
    if (idx % 100 == 0) {
      auto slow = dilate_sum(1, A, r, B).size();
      if (slow != *fast)
        throw std::logic_error("bitset/vector sumset kernels disagree");
    }
    return static_cast<long long>(*fast);
  }
};

std::vector<std::vector<long long>> all_supports(long long window,
                                                 std::size_t max_size,
                                                 bool contain_zero) {
  if (window > kMaxSupportWindow)
    throw CapacityError("slice-support window exceeds capacity (" +
                        std::to_string(kMaxSupportWindow) + ")");
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  std::function<void(long long)> rec = [&](long long next) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_size) return;
    for (long long v = next; v <= window; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  if (contain_zero) {
    cur.push_back(0);
    out.push_back(cur);
    std::function<void(long long)> rec0 = [&](long long next) {
      for (long long v = next; v <= window; ++v) {
        cur.push_back(v);
        out.push_back(cur);
        if (cur.size() < max_size) rec0(v + 1);
        cur.pop_back();
      }
    };
    if (max_size > 1) rec0(1);
  } else {
    rec(0);
  }
  return out;
}

// Coset-structured enumeration (symmetry-reduced): b-exponent sets E within
// [0, max_b] with min(E) <= 1, slice supports within [0, window], and the
// translation anchor min(A_0) = 0.
std::vector<MonoidSet> enum_monoid_sets(const SearchSpec& spec) {
  GroupParams params(spec.n);
  auto zero_supports = all_supports(spec.window, spec.k_max, true);
  auto any_supports = all_supports(spec.window, spec.k_max, false);

  std::vector<std::vector<unsigned>> exponent_sets;
  std::vector<unsigned> exps;
  std::function<void(unsigned)> pick = [&](unsigned next) {
    if (exps.size() >= 2 && exps.front() <= 1) exponent_sets.push_back(exps);
    if (exps.size() == spec.max_slices) return;
    for (unsigned m = next; m <= spec.max_b_exponent; ++m) {
      exps.push_back(m);
      pick(m + 1);
      exps.pop_back();
    }
  };
  pick(0);

  std::vector<MonoidSet> out;
  for (const auto& E : exponent_sets) {
    std::vector<MonoidSet::Slice> slices(E.size(), {0, IntSet()});
    std::function<void(std::size_t, std::size_t)> assign =
        [&](std::size_t pos, std::size_t k_used) {
          if (pos == E.size()) {
            if (k_used < spec.k_min) return;
            MonoidSet S(params, slices);
            if (spec.require_nonabelian && !is_nonabelian(S)) return;
            out.push_back(std::move(S));
            return;
          }
          const auto& pool = pos == 0 ? zero_supports : any_supports;
          std::size_t remaining_slices = E.size() - pos - 1;
          for (const auto& sup : pool) {
            std::size_t k_next = k_used + sup.size();
            if (k_next + remaining_slices > spec.k_max) continue;
            slices[pos] = {E[pos], IntSet::from_values(sup)};
            assign(pos + 1, k_next);
          }
        };
    assign(0, 0);
  }
  return out;
}

// All-singleton-slice families: distinct b-exponents within [0, max_b],
// a-exponents with |x_i| <= window.
std::vector<MonoidSet> enum_singleton_families(const SearchSpec& spec) {
  GroupParams params(spec.n);
  if (spec.window > kMaxSupportWindow)
    throw CapacityError("singleton-family window exceeds capacity");
  std::vector<MonoidSet> out;
  std::size_t k_lo = std::max<std::size_t>(2, spec.k_min);
  for (std::size_t k = k_lo; k <= spec.k_max; ++k) {
    if (k > spec.max_b_exponent + 1) continue;
    std::vector<unsigned> ms;
    std::vector<long long> xs(k, 0);
    std::function<void(std::size_t)> assign_x = [&](std::size_t pos) {
      if (pos == k) {
        std::vector<MonoidSet::Slice> slices;
        slices.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
          slices.emplace_back(
              ms[i], IntSet::from_values(std::vector<long long>{xs[i]}));
        out.emplace_back(params, std::move(slices));
        return;
      }
      for (long long x = -spec.window; x <= spec.window; ++x) {
        xs[pos] = x;
        assign_x(pos + 1);
      }
    };
    std::function<void(unsigned)> pick_m = [&](unsigned next) {
      if (ms.size() == k) {
        assign_x(0);
        return;
      }
      for (unsigned m = next; m <= spec.max_b_exponent; ++m) {
        ms.push_back(m);
        pick_m(m + 1);
        ms.pop_back();
      }
    };
    pick_m(0);
  }
  return out;
}

ScanReport make_report(TheoremId id, const SearchSpec& spec) {
  ScanReport rep;
  rep.theorem = id;
  rep.spec = spec;
  return rep;
}

ScanReport scan_dilate_direct(TheoremId id, const SearchSpec& spec) {
  // Cor1_6 with r = spec.r, or BS12_Direct with r = 2.
  auto start = std::chrono::steady_clock::now();
  ScanReport rep = make_report(id, spec);
  long long r = id == TheoremId::BS12_Direct ? 2 : spec.r;
  auto sets = enum_canonical_sets(spec);
  std::atomic<bool> fallback{false};
  SumSizer sizer{r, static_cast<std::size_t>((r + 1) * spec.window + 2),
                 &fallback};
  Partial p = process_items(sets, [&](std::size_t i, const IntSet& A,
                                      Partial& out) {
    ++out.scanned;
    long long k = static_cast<long long>(A.size());
    long long lhs = sizer.size(i, A, A);
    long long bound =
        id == TheoremId::BS12_Direct ? 3 * k - 2 : std::max(4 * k - 4, 1LL);
    if (id == TheoremId::Cor1_6 && r < 3) return;
    ++out.hyp;
    bool holds = lhs >= bound;
    if (id == TheoremId::Cor1_6) holds = holds && lhs >= 3 * k - 2;
    if (!holds) {
      out.violations.push_back(id == TheoremId::BS12_Direct
                                   ? verify_bs12(A)
                                   : verify_cor1(A, r));
    }
    if (lhs == bound)
      out.add_boundary(format_intset(A) + " |A+" + std::to_string(r) +
                       "A|=" + std::to_string(lhs));
    if (lhs == 4 * k - 4) out.add_equality(format_intset(A));
    out.note_slack(Rational(lhs - bound));
  });
  if (fallback.load()) rep.notes.push_back("bit kernel fell back to vector kernel");
  finalize(rep, std::move(p), start);
  return rep;
}

ScanReport scan_thm1(const SearchSpec& spec_in) {
  auto start = std::chrono::steady_clock::now();
  SearchSpec spec = spec_in;
  spec.require_zero = true;
  spec.k_min = std::max<std::size_t>(2, spec.k_min);
  ScanReport rep = make_report(TheoremId::Thm1_3, spec);
  auto sets = enum_canonical_sets(spec);
  Partial p = process_items(sets, [&](std::size_t, const IntSet& A,
                                      Partial& out) {
    ++out.scanned;
    BoundVerdict v = verify_thm1(A);
    if (!v.hypotheses_met) return;
    ++out.hyp;
    if (!v.holds) out.violations.push_back(v);
    if (v.boundary) out.add_boundary(v.input);
    long long k = static_cast<long long>(A.size());
    long long kh = k + *v.slack_h;
    long long ap = min_ap_size(A).convert_to<long long>();
    if (!v.boundary) out.note_slack(Rational(kh - ap));
    if (v.boundary && ap > kh) ++out.aux2;
    if (kh > 2 * k - 3) {
      ++out.aux;
      out.add_equality("anomaly " + v.input + " k+h=" + std::to_string(kh) +
                       " > 2k-3=" + std::to_string(2 * k - 3));
    }
  });
  rep.notes.push_back("boundary anomalies against the <= 2|A|-3 clause: " +
                      std::to_string(p.aux));
  rep.notes.push_back(
      "hypothesis-boundary containment anomalies (min AP > |A|+h): " +
      std::to_string(p.aux2));
  finalize(rep, std::move(p), start);
  return rep;
}

ScanReport scan_lss(TheoremId id, const SearchSpec& spec_in) {
  auto start = std::chrono::steady_clock::now();
  SearchSpec spec = spec_in;
  spec.require_zero = true;
  ScanReport rep = make_report(id, spec);
  auto sets = enum_canonical_sets(spec);
  Partial p = process_items(sets, [&](std::size_t, const IntSet& A,
                                      Partial& out) {
    for (const IntSet& B : sets) {
      ++out.scanned;
      BoundVerdict v = verify_lss(A, B);
      if (!v.hypotheses_met) continue;
      ++out.hyp;
      if (v.id == TheoremId::LSS_1) ++out.aux;
      if (!v.holds) out.violations.push_back(v);
      if (v.boundary) out.add_boundary(v.input);
      out.note_slack(Rational(v.lhs - v.bound.num));
    }
  });
  rep.notes.push_back("branch-1 instances: " + std::to_string(p.aux) +
                      ", branch-2 instances: " + std::to_string(p.hyp - p.aux));
  finalize(rep, std::move(p), start);
  return rep;
}

ScanReport scan_monoid(TheoremId id, const SearchSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  ScanReport rep = make_report(id, spec);
  bool singleton_family =
      id == TheoremId::Lemma2_3 || id == TheoremId::Lemma2_4;
  std::vector<MonoidSet> sets =
      singleton_family ? enum_singleton_families(spec) : enum_monoid_sets(spec);
  if (!singleton_family)
    rep.notes.push_back(
        "symmetry reduction: min(A_0)=0 anchored, m_0 restricted to {0,1}");
  Partial p = process_items(sets, [&](std::size_t, const MonoidSet& S,
                                      Partial& out) {
    ++out.scanned;
    BoundVerdict v = id == TheoremId::Thm3_Direct ? verify_thm3_direct(S)
                                                  : verify_lemma(S, id);
    if (!v.hypotheses_met) return;
    ++out.hyp;
    if (!v.holds) out.violations.push_back(v);
    if (v.boundary) {
      out.add_boundary(v.input + " |S^2|=" + std::to_string(v.lhs) +
                       " bound=" + v.bound.str());
      out.add_equality(v.input);
    }
    out.note_slack(Rational(v.lhs * v.bound.den - v.bound.num, v.bound.den));
  });
  finalize(rep, std::move(p), start);
  return rep;
}

ScanReport scan_thm3_inverse(const SearchSpec& spec_in) {
  auto start = std::chrono::steady_clock::now();
  SearchSpec spec = spec_in;
  spec.require_zero = true;
  ScanReport rep = make_report(TheoremId::Thm3_Inverse, spec);
  GroupParams params(spec.n);
  auto sets = enum_canonical_sets(spec);
  Partial p = process_items(sets, [&](std::size_t, const IntSet& A,
                                      Partial& out) {
    ++out.scanned;
    MonoidSet S(params, {{1u, A}});
    BoundVerdict v = verify_thm3_inverse(S);
    if (!v.hypotheses_met) return;
    ++out.hyp;
    if (!v.holds) out.violations.push_back(v);
  });
  rep.notes.push_back(
      "instances satisfying |S^2| < 7k/2-6: " + std::to_string(p.hyp) +
      (p.hyp == 0 ? " (hypothesis set is empty over this window; the inverse "
                    "statement is vacuous here)"
                  : ""));
  finalize(rep, std::move(p), start);
  return rep;
}

}  // namespace

void SearchSpec::validate() const {
  if (window < 0) throw std::domain_error("SearchSpec: negative window");
  if (k_min < 1 || k_min > k_max)
    throw std::domain_error("SearchSpec: bad k range");
  if (n < 2) throw std::domain_error("SearchSpec: base must be >= 2");
}

nlohmann::json to_json(const SearchSpec& s) {
  return {{"n", s.n},
          {"window", s.window},
          {"k_min", s.k_min},
          {"k_max", s.k_max},
          {"max_b", s.max_b_exponent},
          {"max_slices", s.max_slices},
          {"require_zero", s.require_zero},
          {"require_d1", s.require_d1},
          {"canonical_dedup", s.canonical_dedup},
          {"require_nonabelian", s.require_nonabelian},
          {"r", s.r}};
}

SearchSpec spec_from_json(const nlohmann::json& j) {
  SearchSpec s;
  if (j.contains("n")) s.n = j.at("n").get<unsigned>();
  if (j.contains("window")) s.window = j.at("window").get<long long>();
  if (j.contains("k_min")) s.k_min = j.at("k_min").get<std::size_t>();
  if (j.contains("k_max")) s.k_max = j.at("k_max").get<std::size_t>();
  if (j.contains("max_b")) s.max_b_exponent = j.at("max_b").get<unsigned>();
  if (j.contains("max_slices"))
    s.max_slices = j.at("max_slices").get<std::size_t>();
  if (j.contains("require_zero"))
    s.require_zero = j.at("require_zero").get<bool>();
  if (j.contains("require_d1")) s.require_d1 = j.at("require_d1").get<bool>();
  if (j.contains("canonical_dedup"))
    s.canonical_dedup = j.at("canonical_dedup").get<bool>();
  if (j.contains("require_nonabelian"))
    s.require_nonabelian = j.at("require_nonabelian").get<bool>();
  if (j.contains("r")) s.r = j.at("r").get<long long>();
  s.validate();
  return s;
}

nlohmann::json to_json(const ScanReport& r, bool include_wall_time) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  nlohmann::json j{{"theorem", theorem_name(r.theorem)},
                   {"spec", to_json(r.spec)},
                   {"instances_scanned", r.instances_scanned},
                   {"hypotheses_met", r.hypotheses_met_count},
                   {"violations", violations},
                   {"boundary_cases", r.boundary_cases},
                   {"equality_cases", r.equality_cases},
                   {"notes", r.notes}};
  if (r.min_slack)
    j["min_slack"] = {{"num", r.min_slack->num}, {"den", r.min_slack->den}};
  else
    j["min_slack"] = nullptr;
  if (include_wall_time) j["wall_time_s"] = r.wall_time_s;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_csv(const ScanReport& r) {
  std::string out = "kind,detail\n";
  out += "summary," +
         csv_escape("theorem=" + theorem_name(r.theorem) +
                    " instances=" + std::to_string(r.instances_scanned) +
                    " hypotheses_met=" +
                    std::to_string(r.hypotheses_met_count) + " violations=" +
                    std::to_string(r.violations.size()) +
                    (r.min_slack ? " min_slack=" + r.min_slack->str() : "")) +
         "\n";
  for (const auto& n : r.notes) out += "note," + csv_escape(n) + "\n";
  for (const auto& v : r.violations)
    out += "violation," + csv_escape(to_json(v).dump()) + "\n";
  for (const auto& b : r.boundary_cases)
    out += "boundary," + csv_escape(b) + "\n";
  for (const auto& e : r.equality_cases)
    out += "equality," + csv_escape(e) + "\n";
  return out;
}

void enum_canonical_sets(const SearchSpec& spec,
                         const std::function<void(const IntSet&)>& emit) {
  spec.validate();
  enum_subsets(spec, [&](const std::vector<long long>& vals) {
    if (spec.require_d1 && gcd_diffs_ll(vals) != 1) return;
    IntSet A = IntSet::from_values(vals);
    if (spec.canonical_dedup && !(canonical_form(A) == A)) return;
    emit(A);
  });
}

std::vector<IntSet> enum_canonical_sets(const SearchSpec& spec) {
  std::vector<IntSet> out;
  enum_canonical_sets(spec, [&](const IntSet& A) { out.push_back(A); });
  return out;
}

ScanReport find_equality_sets(unsigned n, const SearchSpec& spec_in) {
  if (n < 3) throw std::domain_error("find_equality_sets: requires n >= 3");
  auto start = std::chrono::steady_clock::now();
  SearchSpec spec = spec_in;
  spec.n = n;
  ScanReport rep = make_report(TheoremId::Thm1_5, spec);
  auto sets = enum_canonical_sets(spec);
  std::atomic<bool> fallback{false};
  SumSizer sizer{static_cast<long long>(n),
                 static_cast<std::size_t>((n + 1) * spec.window + 2),
                 &fallback};
  Partial p = process_items(sets, [&](std::size_t i, const IntSet& A,
                                      Partial& out) {
    ++out.scanned;
    ++out.hyp;
    long long k = static_cast<long long>(A.size());
    long long lhs = sizer.size(i, A, A);
    bool equality = lhs == 4 * k - 4;
    if (equality) out.add_equality(format_intset(A));
    out.note_slack(Rational(lhs - (4 * k - 4)));
    if (n == 3 && k >= 3) {
      bool classified = classify_extremal(A).tag != ExtremalTag::None;
      if (classified != equality) {
        BoundVerdict v = verify_thm15(A);
        out.violations.push_back(v);
      }
    }
  });
  if (fallback.load())
    rep.notes.push_back("bit kernel fell back to vector kernel");
  if (n == 3)
    rep.notes.push_back(
        "equality cases cross-checked against classify_extremal");
  finalize(rep, std::move(p), start);
  return rep;
}

ScanReport scan_bound(TheoremId id, const SearchSpec& spec) {
  spec.validate();
  switch (id) {
    case TheoremId::Cor1_6:
    case TheoremId::BS12_Direct:
      return scan_dilate_direct(id, spec);
    case TheoremId::Thm1_3:
      return scan_thm1(spec);
    case TheoremId::LSS_1:
    case TheoremId::LSS_2:
      return scan_lss(id, spec);
    case TheoremId::Thm1_5:
      return find_equality_sets(spec.n, spec);
    case TheoremId::Thm3_Direct:
    case TheoremId::Lemma2_1b:
    case TheoremId::Lemma2_2a:
    case TheoremId::Lemma2_2b:
    case TheoremId::Lemma2_3:
    case TheoremId::Lemma2_4:
      return scan_monoid(id, spec);
    case TheoremId::Thm3_Inverse:
      return scan_thm3_inverse(spec);
    default:
      throw std::domain_error("scan_bound: unsupported theorem id " +
                              theorem_name(id));
  }
}

namespace {

IntSet random_intset(std::mt19937_64& rng, const SearchSpec& spec,
                     bool force_zero) {
  std::uniform_int_distribution<std::size_t> kd(spec.k_min, spec.k_max);
  std::uniform_int_distribution<long long> vd(0, spec.window);
  std::size_t k = kd(rng);
  std::vector<long long> vals;
  if (force_zero || spec.require_zero) vals.push_back(0);
  while (true) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() >= k) break;
    vals.push_back(vd(rng));
  }
  return IntSet::from_values(vals);
}

MonoidSet random_monoid_set(std::mt19937_64& rng, const SearchSpec& spec) {
  GroupParams params(spec.n);
  std::uniform_int_distribution<std::size_t> kd(std::max<std::size_t>(
                                                    2, spec.k_min),
                                                spec.k_max);
  std::uniform_int_distribution<unsigned> md(0, spec.max_b_exponent);
  std::uniform_int_distribution<long long> xd(-spec.window, spec.window);
  std::size_t k = kd(rng);
  std::vector<MonoidElement> elems;
  for (std::size_t i = 0; i < k; ++i)
    elems.push_back({md(rng), BigInt(xd(rng))});
  return MonoidSet::from_elements(elems, params);
}

}  // namespace

ScanReport hunt(TheoremId id, const SearchSpec& spec, std::uint64_t budget,
                std::uint64_t seed) {
  spec.validate();
  auto start = std::chrono::steady_clock::now();
  ScanReport rep = make_report(id, spec);
  rep.notes.push_back("randomized hunt, seed=" + std::to_string(seed) +
                      ", budget=" + std::to_string(budget));
  std::mt19937_64 rng(seed);
  GroupParams params(spec.n);
  Partial p;
  for (std::uint64_t i = 0; i < budget; ++i) {
    BoundVerdict v;
    switch (id) {
      case TheoremId::Cor1_6:
        v = verify_cor1(random_intset(rng, spec, false), spec.r);
        break;
      case TheoremId::BS12_Direct:
        v = verify_bs12(random_intset(rng, spec, false));
        break;
      case TheoremId::BS12_Inverse:
        v = verify_bs12_inverse(random_intset(rng, spec, true));
        break;
      case TheoremId::Thm1_3:
        v = verify_thm1(random_intset(rng, spec, true));
        break;
      case TheoremId::Thm1_5:
        v = verify_thm15(random_intset(rng, spec, false));
        break;
      case TheoremId::LSS_1:
      case TheoremId::LSS_2: {
        IntSet A = random_intset(rng, spec, true);
        IntSet B = random_intset(rng, spec, true);
        v = verify_lss(A, B);
        break;
      }
      case TheoremId::Thm3_Direct:
        v = verify_thm3_direct(random_monoid_set(rng, spec));
        break;
      case TheoremId::Thm3_Inverse: {
        IntSet A = random_intset(rng, spec, true);
        v = verify_thm3_inverse(MonoidSet(params, {{1u, A}}));
        break;
      }
      case TheoremId::Lemma2_1a:
      case TheoremId::Lemma2_1b:
      case TheoremId::Lemma2_2a:
      case TheoremId::Lemma2_2b:
      case TheoremId::Lemma2_3:
      case TheoremId::Lemma2_4:
        v = verify_lemma(random_monoid_set(rng, spec), id);
        break;
      default:
        throw std::domain_error("hunt: unsupported theorem id");
    }
    ++p.scanned;
    if (!v.hypotheses_met) continue;
    ++p.hyp;
    if (!v.holds) p.violations.push_back(v);
    if (v.boundary) p.add_boundary(v.input);
    p.note_slack(Rational(v.lhs * v.bound.den - v.bound.num, v.bound.den));
  }
  rep.notes.push_back("hypotheses_met count = " +
                      std::to_string(p.hyp));
  finalize(rep, std::move(p), start);
  return rep;
}

}  // namespace bsd
