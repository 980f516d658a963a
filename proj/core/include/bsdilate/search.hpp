#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bsdilate/theorems.hpp"

namespace bsd {

/// Scan-space description. `window` bounds set values to [0, window] (and
/// bounds |x_i| for all-singleton monoid scans). Constraint flags narrow the
/// enumerated sets; canonical_dedup keeps only A with A == canonical_form(A).
struct SearchSpec {
  unsigned n = 3;
  long long window = 12;
  std::size_t k_min = 1;
  std::size_t k_max = 5;
  unsigned max_b_exponent = 2;
  std::size_t max_slices = 3;
  bool require_zero = false;
  bool require_d1 = false;
  bool canonical_dedup = false;
  bool require_nonabelian = false;
  long long r = 3;  // dilation for cor1.6-style scans

  void validate() const;

  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

nlohmann::json to_json(const SearchSpec& s);
SearchSpec spec_from_json(const nlohmann::json& j);

/// Aggregated result of one exhaustive or randomized scan. Everything except
/// wall_time_s is deterministic for a fixed spec (and seed).
struct ScanReport {
  TheoremId theorem = TheoremId::Cor1_6;
  SearchSpec spec;
  unsigned long long instances_scanned = 0;
  unsigned long long hypotheses_met_count = 0;
  std::vector<BoundVerdict> violations;
  std::vector<std::string> boundary_cases;
  std::vector<std::string> equality_cases;
  std::vector<std::string> notes;
  std::optional<Rational> min_slack;
  double wall_time_s = 0.0;

  bool clean() const { return violations.empty(); }
};

nlohmann::json to_json(const ScanReport& r, bool include_wall_time = true);
std::string to_csv(const ScanReport& r);

/// Streams every A within [0, window] with |A| in [k_min, k_max] satisfying
/// the constraint flags, in lexicographic order; with canonical_dedup set,
/// exactly one representative per affine-canonical class is emitted.
void enum_canonical_sets(const SearchSpec& spec,
                         const std::function<void(const IntSet&)>& emit);
std::vector<IntSet> enum_canonical_sets(const SearchSpec& spec);

/// All canonical A in the window with |A + n.A| = 4|A| - 4; for n = 3 each
/// scanned set is cross-checked against classify_extremal, and a mismatch in
/// either direction is reported as a violation.
ScanReport find_equality_sets(unsigned n, const SearchSpec& spec);

/// Exhaustive verification of one named bound over the spec's window.
ScanReport scan_bound(TheoremId id, const SearchSpec& spec);

/// Seeded randomized search beyond the exhaustive windows; reproducible for
/// a fixed (spec, budget, seed).
ScanReport hunt(TheoremId id, const SearchSpec& spec, std::uint64_t budget,
                std::uint64_t seed);

}  // namespace bsd
