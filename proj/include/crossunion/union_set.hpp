#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crossunion/family.hpp"

namespace crossunion {

/// Down-closed set of subsets of [n] (n <= 24), one bit per subset.
///
/// Holds every subset of some union A_0 u ... u A_j reachable by a transversal
/// of the families seen so far. Down-closure does not change which completions
/// cover [n], and it turns "may A still be used" into one bit lookup: A is
/// admissible iff [n] \ A is absent.
class DownSet {
 public:
  /// The down-closure of {empty set}: the state before any family is chosen.
  explicit DownSet(int n);

  int n() const noexcept { return n_; }
  bool contains(SetMask set) const noexcept {
    return (words_[set >> 6] >> (set & 63)) & 1U;
  }
  bool covers() const noexcept { return contains(full_); }
  bool admits(SetMask set) const noexcept { return !contains(full_ & ~set); }

  /// Down-closure of {U u A : U in this, A in members}.
  DownSet extend(std::span<const SetMask> members) const;

  friend bool operator==(const DownSet&, const DownSet&) = default;

 private:
  DownSet(int n, std::vector<std::uint64_t> words);

  int n_;
  SetMask full_;
  std::vector<std::uint64_t> words_;
};

}  // namespace crossunion
