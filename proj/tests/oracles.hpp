// Slow, independent reference implementations used to pin down the library.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "crossunion/family.hpp"
#include "crossunion/rng.hpp"

namespace oracle {

using crossunion::Family;
using crossunion::SetMask;

inline std::uint64_t pascal(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(a) + 1);
  for (int i = 0; i <= a; ++i) {
    t[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[a][b];
}

inline std::vector<SetMask> k_subsets(int n, int k) {
  std::vector<SetMask> out;
  for (SetMask m = 0; m < (SetMask{1} << n); ++m) {
    if (std::popcount(m) == k) out.push_back(m);
  }
  return out;
}

/// Walks every transversal; no memo, no pruning.
inline bool cross_union(const std::vector<std::vector<SetMask>>& fams, int n) {
  const SetMask full = n == 64 ? ~SetMask{0} : (SetMask{1} << n) - 1;
  std::function<bool(std::size_t, SetMask)> walk = [&](std::size_t i, SetMask acc) {
    if (i == fams.size()) return acc != full;
    for (SetMask a : fams[i]) {
      if (!walk(i + 1, acc | a)) return false;
    }
    return true;
  };
  return walk(0, 0);
}

inline std::vector<std::vector<SetMask>> members(const std::vector<Family>& fams) {
  std::vector<std::vector<SetMask>> out;
  for (const auto& f : fams) out.emplace_back(f.sets().begin(), f.sets().end());
  return out;
}

inline std::vector<SetMask> shadow(const std::vector<SetMask>& fam, int n, int level) {
  std::vector<SetMask> out;
  for (SetMask g : k_subsets(n, level)) {
    if (std::any_of(fam.begin(), fam.end(), [&](SetMask a) { return (a & g) == g; })) out.push_back(g);
  }
  return out;
}

/// Maximum total over every tuple of non-empty subfamilies; (2^C(n,k) - 1)^(s+1) tuples.
inline std::uint64_t brute_max(int n, int k, int s) {
  const auto slice = k_subsets(n, k);
  const std::uint64_t choices = (std::uint64_t{1} << slice.size()) - 1;
  std::vector<std::vector<SetMask>> fams(static_cast<std::size_t>(s) + 1);
  std::uint64_t best = 0;
  std::function<void(std::size_t, std::uint64_t)> pick = [&](std::size_t i, std::uint64_t total) {
    if (i == fams.size()) {
      if (total > best && cross_union(fams, n)) best = total;
      return;
    }
    for (std::uint64_t bits = 1; bits <= choices; ++bits) {
      fams[i].clear();
      for (std::size_t j = 0; j < slice.size(); ++j) {
        if (bits >> j & 1) fams[i].push_back(slice[j]);
      }
      pick(i + 1, total + fams[i].size());
    }
  };
  pick(0, 0);
  return best;
}

inline Family random_family(crossunion::Rng& rng, int n, int k, double density) {
  std::vector<SetMask> sets;
  const auto all = k_subsets(n, k);
  for (SetMask a : all) {
    if (static_cast<double>(rng.below(1000000)) < density * 1e6) sets.push_back(a);
  }
  if (sets.empty()) sets.push_back(all[rng.below(all.size())]);
  return Family(n, k, std::move(sets));
}

/// Random families thinned until cross-union: while some transversal covers [n],
/// delete one of its members from a family that can spare it. Returns an empty
/// vector when a covering transversal consists of singleton families only.
inline std::vector<Family> random_cross_union(crossunion::Rng& rng, int n, const std::vector<int>& ks,
                                              double density) {
  std::vector<std::vector<SetMask>> fams;
  for (int k : ks) {
    const Family f = random_family(rng, n, k, density);
    fams.emplace_back(f.sets().begin(), f.sets().end());
  }
  while (true) {
    std::vector<Family> current;
    for (std::size_t i = 0; i < fams.size(); ++i) current.emplace_back(n, ks[i], fams[i]);
    const auto witness = crossunion::covering_transversal(current);
    if (!witness) return current;
    std::vector<std::size_t> spare;
    for (std::size_t i = 0; i < fams.size(); ++i) {
      if (fams[i].size() > 1) spare.push_back(i);
    }
    if (spare.empty()) return {};
    const std::size_t i = spare[rng.below(spare.size())];
    std::erase(fams[i], (*witness)[i]);
  }
}

/// Random subfamilies of C([n] \ {avoid}, k_i); cross-union by construction.
inline std::vector<Family> random_avoiding(crossunion::Rng& rng, int n, const std::vector<int>& ks,
                                           int avoid, double density) {
  std::vector<Family> out;
  const SetMask bit = SetMask{1} << (avoid - 1);
  for (int k : ks) {
    std::vector<SetMask> sets;
    std::vector<SetMask> pool;
    for (SetMask a : k_subsets(n, k)) {
      if ((a & bit) == 0) pool.push_back(a);
    }
    for (SetMask a : pool) {
      if (static_cast<double>(rng.below(1000000)) < density * 1e6) sets.push_back(a);
    }
    if (sets.empty()) sets.push_back(pool[rng.below(pool.size())]);
    out.emplace_back(n, k, std::move(sets));
  }
  return out;
}

}  // namespace oracle
