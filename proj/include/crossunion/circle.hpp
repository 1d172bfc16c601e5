#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "crossunion/bigint.hpp"
#include "crossunion/family.hpp"

namespace crossunion {

/// lhs = sum_i |G_i| / C(n, k_i), compared with s = (number of families) - 1.
struct CircleReport {
  BigRational lhs;
  int s = 0;
  bool holds = false;  // lhs <= s
  bool tight = false;  // lhs == s
};

/// Raised when a precondition asks for cross-union families and they are not.
class NotCrossUnion : public std::invalid_argument {
 public:
  explicit NotCrossUnion(std::vector<SetMask> witness);
  const std::vector<SetMask>& witness() const noexcept { return witness_; }

 private:
  std::vector<SetMask> witness_;
};

/// Families may have different uniformities k_i; requires sum k_i >= n and the
/// cross-union property (else NotCrossUnion carrying a covering transversal).
CircleReport circle_check(std::span<const Family> families);

/// Sets of sizes ks[i] whose union is [n]; elements are dealt out in increasing
/// order, leftover slots take the smallest elements not yet in that set.
std::vector<SetMask> default_cover(int n, std::span<const int> ks);

/// Number of independent random streams a Monte Carlo run is split into. Fixed,
/// so the estimate does not depend on the thread count.
inline constexpr std::uint64_t kCircleShards = 64;

/// Monte Carlo estimate of E[sum_i 1{alpha(A_i) in G_i}] over uniform permutations
/// alpha of [n]. Families may be empty here. Shard t draws from
/// Rng(mix_seed(seed, t)) with a Fisher-Yates shuffle from the top index down.
double circle_expectation(std::span<const Family> families, std::span<const SetMask> cover,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// For nested G_0 c ... c G_s, all k-uniform, n = (s+1)k and s >= 2: true iff
/// (lhs == s) implies all families are equal. Rejects tuples outside that setting.
bool equality_case_check(const FamilyTuple& tuple);

/// For every ordered partition [n] = B_0 u ... u B_s into k-sets, exactly one
/// index i has B_i outside G_i. Needs n = (s+1)k and n <= 12.
bool partition_claim_holds(const FamilyTuple& tuple);

}  // namespace crossunion
