#include "crossunion/circle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "crossunion/combinat.hpp"
#include "crossunion/compression.hpp"
#include "crossunion/rng.hpp"

namespace crossunion {

NotCrossUnion::NotCrossUnion(std::vector<SetMask> witness)
    : std::invalid_argument("families are not cross-union"), witness_(std::move(witness)) {}

CircleReport circle_check(std::span<const Family> families) {
  if (families.empty()) throw std::invalid_argument("circle_check: no families");
  const int n = families.front().n();
  long long total_k = 0;
  for (const Family& g : families) {
    if (g.n() != n) throw std::invalid_argument("circle_check: families over different universes");
    total_k += g.k();
  }
  if (total_k < n) throw std::invalid_argument("circle_check: need k_0 + ... + k_s >= n");
  if (auto witness = covering_transversal(families)) throw NotCrossUnion(std::move(*witness));

  CircleReport report;
  report.s = static_cast<int>(families.size()) - 1;
  for (const Family& g : families) {
    report.lhs += BigRational(BigInt(g.size()), binom(n, g.k()));
  }
  report.holds = report.lhs <= report.s;
  report.tight = report.lhs == report.s;
  return report;
}

std::vector<SetMask> default_cover(int n, std::span<const int> ks) {
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("default_cover: bad n");
  if (std::accumulate(ks.begin(), ks.end(), 0LL) < n) {
    throw std::invalid_argument("default_cover: sizes sum below n");
  }
  std::vector<SetMask> cover;
  int next = 0;
  for (int k : ks) {
    if (k < 0 || k > n) throw std::invalid_argument("default_cover: size out of range");
    SetMask set = 0;
    for (int slot = 0; slot < k; ++slot) {
      if (next < n) {
        set |= SetMask{1} << next++;
      } else {
        const SetMask clear = ~set & universe_mask(n);
        set |= clear & (~clear + 1);
      }
    }
    cover.push_back(set);
  }
  return cover;
}

double circle_expectation(std::span<const Family> families, std::span<const SetMask> cover,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (families.empty() || families.size() != cover.size()) {
    throw std::invalid_argument("circle_expectation: need one cover set per family");
  }
  if (trials == 0) throw std::invalid_argument("circle_expectation: trials must be positive");
  const int n = families.front().n();
  SetMask covered = 0;
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families[i].n() != n) throw std::invalid_argument("circle_expectation: mixed universes");
    if (std::popcount(cover[i]) != families[i].k() || (cover[i] & ~universe_mask(n)) != 0) {
      throw std::invalid_argument("circle_expectation: cover set size does not match family");
    }
    covered |= cover[i];
  }
  if (covered != universe_mask(n)) throw std::invalid_argument("circle_expectation: sets do not cover [n]");

  std::vector<std::vector<int>> cover_elements;
  for (SetMask a : cover) {
    std::vector<int> elems;
    for (int e : set_elements(a)) elems.push_back(e - 1);
    cover_elements.push_back(std::move(elems));
  }

  std::vector<std::uint64_t> hits(kCircleShards, 0);
  auto run_shard = [&](std::uint64_t shard) {
    std::uint64_t count = trials / kCircleShards + (shard < trials % kCircleShards ? 1 : 0);
    Rng rng(mix_seed(seed, shard));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::uint64_t local = 0;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::iota(perm.begin(), perm.end(), 0);
      for (int idx = n - 1; idx > 0; --idx) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(idx) + 1));
        std::swap(perm[static_cast<std::size_t>(idx)], perm[static_cast<std::size_t>(j)]);
      }
      for (std::size_t i = 0; i < families.size(); ++i) {
        SetMask image = 0;
        for (int e : cover_elements[i]) image |= SetMask{1} << perm[static_cast<std::size_t>(e)];
        if (families[i].contains(image)) ++local;
      }
    }
    hits[shard] = local;
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(threads, kCircleShards));
  if (workers == 1) {
    for (std::uint64_t shard = 0; shard < kCircleShards; ++shard) run_shard(shard);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t shard = next++; shard < kCircleShards; shard = next++) run_shard(shard);
      });
    }
  }
  const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  return static_cast<double>(total) / static_cast<double>(trials);
}

namespace {

void require_equal_slices(const FamilyTuple& tuple) {
  const int s = tuple.s();
  if (s < 2) throw std::invalid_argument("equality case needs s >= 2");
  if (tuple.n() != (s + 1) * tuple.k()) throw std::invalid_argument("equality case needs n = (s+1)k");
  if (!is_nested(tuple.families())) throw std::invalid_argument("equality case needs nested families");
}

}  // namespace

bool equality_case_check(const FamilyTuple& tuple) {
  require_equal_slices(tuple);
  if (!is_cross_union(tuple)) throw std::invalid_argument("equality case needs cross-union families");
  const BigInt total = tuple.total_size();
  const bool tight = total == BigInt(tuple.s()) * binom(tuple.n(), tuple.k());
  if (!tight) return true;
  const auto fams = tuple.families();
  return std::all_of(fams.begin(), fams.end(), [&](const Family& g) { return g == fams.front(); });
}

namespace {

bool every_partition_has_one_miss(const FamilyTuple& tuple, std::size_t level, SetMask remaining,
                                  int misses) {
  if (misses > 1) return false;
  if (level == tuple.size()) return misses == 1;
  const int k = tuple.k();
  // Enumerate k-subsets of `remaining`.
  const std::vector<int> elems = set_elements(remaining);
  const int m = static_cast<int>(elems.size());
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    SetMask block = 0;
    for (int p : pick) block |= SetMask{1} << (elems[static_cast<std::size_t>(p)] - 1);
    const int miss = tuple[level].contains(block) ? 0 : 1;
    if (!every_partition_has_one_miss(tuple, level + 1, remaining & ~block, misses + miss)) {
      return false;
    }
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) {
      pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q) - 1] + 1;
    }
  }
  return true;
}

}  // namespace

bool partition_claim_holds(const FamilyTuple& tuple) {
  if (tuple.n() != (tuple.s() + 1) * tuple.k()) {
    throw std::invalid_argument("partition claim needs n = (s+1)k");
  }
  if (tuple.n() > 12) throw std::invalid_argument("partition claim enumeration limited to n <= 12");
  return every_partition_has_one_miss(tuple, 0, universe_mask(tuple.n()), 0);
}

}  // namespace crossunion
