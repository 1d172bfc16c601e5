#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossunion/bigint.hpp"
#include "crossunion/family.hpp"

namespace crossunion {

/// Largest slice C(n, k) the reduced search accepts.
inline constexpr std::uint64_t kSearchMaxSlice = 40;
/// Largest slice C(n, k) the unreduced (raw) search accepts.
inline constexpr std::uint64_t kRawMaxSlice = 16;
/// Largest slice for which verify_main_theorem collects maximizers over all tuples;
/// the collecting search grows about twelvefold per extra set.
inline constexpr std::uint64_t kUnreducedUniquenessSlice = 9;

struct SearchOptions {
  bool circle_bound = true;
  bool rwise_bound = true;
  bool g0_lower_bound = true;
  unsigned threads = 1;
};

/// Bounds available to the reduced search for n = sk + l.
struct BoundContext {
  int n = 0, k = 0, s = 0, l = 0;
  std::uint64_t slice = 0;       // C(n, k)
  std::uint64_t low_slice = 0;   // C(n, l)
  std::uint64_t star_value = 0;  // (s+1) C(n-1, k)
  std::uint64_t rwise_cap = 0;   // C(n-1, k): the smallest family is (s+1)-wise union
  BigInt g0_lower;               // (s+1)C(n-1,k) - sC(n,k) + C(ks,k), for totals >= star_value

  /// Upper bound on the total once G_0 is fixed: (shadow_l(G_0), G_1, ..., G_s)
  /// is cross-union with uniformities summing to n, so the averaging inequality
  /// caps G_1 + ... + G_s.
  std::uint64_t circle_total(std::uint64_t g0_size, std::uint64_t g0_shadow) const;
};

BoundContext make_bound_context(int n, int k, int s);

struct SearchResult {
  int n = 0, k = 0, s = 0;
  std::uint64_t max_sum = 0;
  std::uint64_t star_value = 0;
  /// Maximizers among nested tuples of shifted families, canonical order.
  std::vector<FamilyTuple> certificates;
  /// The n star tuples (all families C([n] \ {i}, k)) when they attain max_sum.
  std::vector<FamilyTuple> star_certificates;
  std::uint64_t nodes_explored = 0;
  std::uint64_t nodes_pruned = 0;
  std::uint64_t pruned_circle = 0;
  std::uint64_t pruned_rwise = 0;
  std::uint64_t pruned_g0_lower = 0;
  std::uint64_t pruned_capacity = 0;
  std::vector<std::string> bounds_used;
  int passes = 1;
};

/// Throws std::invalid_argument unless 1 <= s, sk < n <= (s+1)k, n <= 24 and
/// C(n, k) <= kSearchMaxSlice.
void check_search_parameters(int n, int k, int s);

/// s+1 copies of C([n] \ {avoid}, k).
FamilyTuple star_tuple(int n, int k, int s, int avoid);

/// Exact maximum of |F_0| + ... + |F_s| over non-empty cross-union tuples.
///
/// Shifting every family and then replacing pairs by their intersection and union
/// keeps the total and the cross-union property, so the search runs over chains
/// G_0 c ... c G_s of shifted families. G_0 is chosen first, each later family is
/// a shifted superset of its predecessor, and the last family is the largest one
/// the others admit. Parallel over G_0 with a shared incumbent seeded with the
/// star total. If the maximum exceeds that seed a second pass starts from the
/// maximum, so the reported counters come from a run whose incumbent never
/// moved and do not depend on the thread schedule.
SearchResult max_sum_search(int n, int k, int s, const SearchOptions& options = {});

struct RawResult {
  std::uint64_t max_sum = 0;
  /// Every maximizing tuple up to reordering of its families (families sorted
  /// by decreasing size, then decreasing colex rank). Filled when requested.
  std::vector<FamilyTuple> maximizers;
  std::uint64_t nodes = 0;
};

/// The same maximum over all non-empty tuples with no shifting or nesting. The
/// only reductions are family reordering and taking the last family as large as
/// the others allow. With seed_with_star the star total is taken as the starting
/// incumbent. With averaging_cap every bound is also capped at s C(n,k), the
/// averaging inequality for the whole tuple; when n = (s+1)k that cap equals the
/// star total and settles the value at once, so it is off by default.
RawResult raw_max_search(int n, int k, int s, bool collect_maximizers = false,
                         bool seed_with_star = true, bool averaging_cap = false);

/// Every nested cross-union tuple G_0 c ... c G_s (families arbitrary, not
/// necessarily shifted) with G_0 non-empty, total >= target, and G_s equal to
/// the largest family the others admit. Complete for target = maximum.
std::vector<FamilyTuple> nested_tuples_at_least(int n, int k, int s, std::uint64_t target);

struct MainTheoremReport {
  int n = 0, k = 0, s = 0, l = 0;
  std::uint64_t max_sum = 0;
  std::uint64_t star_value = 0;
  bool value_matches = false;
  /// True when uniqueness was checked over all tuples, false when only shifted
  /// nested maximizers were inspected (shifting identifies isomorphic maximizers).
  bool unreduced = false;
  std::size_t maximizers_checked = 0;
  bool all_maximizers_are_stars = false;
  bool holds = false;
};

/// Requires n = sk + l with 1 <= l <= k and s >= 4l, plus the search guards.
MainTheoremReport verify_main_theorem(int n, int k, int s, const SearchOptions& options = {});

struct Question41Report {
  int n = 0, k = 0, s = 0, l = 0;
  std::uint64_t max_sum = 0;
  BigInt star_candidate;     // (s+1) C(n-1, k)
  BigInt example_candidate;  // 1 + s C(n,k) - sum_{i=0}^{k-l} C(k,i) C(n-k,k-i)
  BigInt larger_candidate;
  bool equals_larger = false;
  bool exceeds_larger = false;
};

/// Records how the exact maximum compares with both candidates; asserts nothing.
/// Requires 0 < l < k.
Question41Report explore_question41(int n, int k, int s, const SearchOptions& options = {});

}  // namespace crossunion
