#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crossunion/bigint.hpp"

namespace crossunion {

enum class Relation { AtLeast, Greater, Equal };

/// One exact comparison. `holds` reads lhs >= rhs, lhs > rhs or lhs == rhs
/// according to `relation`; `strict` is lhs > rhs regardless.
struct InequalityRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  BigRational lhs;
  BigRational rhs;
  Relation relation = Relation::AtLeast;
  bool holds = false;
  bool strict = false;
  /// False when the hypotheses of the statement do not apply at this point; the
  /// comparison is still evaluated but is not a violation if it fails.
  bool applicable = true;
};

const char* relation_symbol(Relation r);

/// Both cases of the lower bound on (s+1)C(n-1,k) - sC(n,k) + C(ks,k), n = ks + l:
/// case (i) against (l/k)C(n,k), case (ii) against C((1-1/k)n+1, k). The case the
/// statement assigns (k >= 2l gives (i), otherwise (ii)) is marked applicable.
/// Requires 1 <= l <= k and s >= 4l.
std::pair<InequalityRecord, InequalityRecord> check_lemma_computation(int k, int l, int s);

/// The record whose case applies.
const InequalityRecord& applicable_case(const std::pair<InequalityRecord, InequalityRecord>& cases);

struct SlicesCheck {
  /// C(x0,l)/C(n,l) >= C(x0,k)/C(n,k) + (k-l)/n. Applicable iff the hypothesis holds.
  InequalityRecord record;
  /// C(x0,l)/C(n,l) <= (k/l) C(x0,k)/C(n,k).
  bool hypothesis = false;
  bool equality = false;
  /// l == k, or x0 == n - 1.
  bool equality_expected = false;
  /// Conclusion holds and equality matches the prediction, or the hypothesis fails.
  bool consistent = false;
};

/// Requires 1 <= l <= k < n and k <= x0 <= n - 1.
SlicesCheck check_different_slices(int n, int k, int l, const BigRational& x0);

/// Certified enclosure lo <= ln(x) <= hi for a rational x >= 1.
std::pair<BigRational, BigRational> ln_bounds(const BigRational& x, int terms = 40);

struct Example13Report {
  int k = 0, c = 0, s = 0, l = 0, n = 0;
  BigInt family1_size;  // sets meeting [k] in at least c+1 elements
  /// lhs = 1 + |F_1| + (s-1)C(n,k), rhs = (s+1)C(n-1,k), relation ">".
  InequalityRecord record;
  /// s < k/((c+2) ln k) - 1, decided with certified bounds on ln k.
  bool intro_condition = false;
  /// Cross-union validity and how it was established.
  bool cross_union = false;
  bool exhaustive = false;
};

/// F_0 = {[k]}, F_1 = {A : |A n [k]| >= c+1}, F_2 = ... = F_s = C([n],k) with
/// k = l + c and n = sk + l. Requires s >= 2, c >= 1, l >= 1. Exhaustive
/// cross-union check when n <= kExample13ExhaustiveN.
inline constexpr int kExample13ExhaustiveN = 12;
Example13Report example13_sum(int k, int c, int s);

/// (s+1)C(n-1,k)/C(n,k) == s - (k-l)/n with l = n - ks; requires 1 <= l <= k.
InequalityRecord check_eq1_identity(int n, int k, int s);

struct GridSummary {
  std::string name;
  std::uint64_t points = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  /// Slice-comparison grid only: points where equality disagrees with the characterization.
  std::uint64_t equality_mismatches = 0;
  std::vector<std::pair<std::string, std::uint64_t>> tallies;
  /// The first few failing records, in grid order.
  std::vector<InequalityRecord> failures;
  /// Every applicable record in grid order, when requested.
  std::vector<InequalityRecord> records;
};

inline constexpr std::size_t kGridFailureSample = 20;

/// 1 <= l <= k <= k_max, s in [4l, 4l + s_span].
GridSummary lemma26_grid(int k_max = 25, int s_span = 20, unsigned threads = 1,
                         bool keep_records = false);
/// All 1 <= l <= k < n <= n_max with x0 stepping by 1/2 over [k, n-1].
GridSummary lemma27_grid(int n_max = 60, unsigned threads = 1, bool keep_records = false);
/// n = ks + l for 1 <= l <= k <= k_max, 1 <= s <= s_max.
GridSummary eq1_grid(int k_max = 20, int s_max = 100, unsigned threads = 1,
                     bool keep_records = false);

}  // namespace crossunion
