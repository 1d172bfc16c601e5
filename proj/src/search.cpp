#include "crossunion/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "crossunion/combinat.hpp"
#include "crossunion/shadow.hpp"
#include "crossunion/union_set.hpp"

namespace crossunion {

namespace {

// A family as a bit set over the indices of the colex-ordered slice C([n], k).
using Bits = std::uint64_t;

class Slice {
 public:
  Slice(int n, int k) : n_(n), k_(k), sets_(all_k_subsets(n, k)) {
    if (sets_.size() > 64) throw std::invalid_argument("slice too large for bit-set families");
    all_ = sets_.size() == 64 ? ~Bits{0} : (Bits{1} << sets_.size()) - 1;
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t count() const noexcept { return sets_.size(); }
  SetMask set(std::size_t i) const { return sets_[i]; }

  std::size_t index_of(SetMask s) const {
    return static_cast<std::size_t>(std::lower_bound(sets_.begin(), sets_.end(), s) - sets_.begin());
  }

  void members(Bits f, std::vector<SetMask>& out) const {
    out.clear();
    while (f != 0) {
      out.push_back(sets_[static_cast<std::size_t>(std::countr_zero(f))]);
      f &= f - 1;
    }
  }

  Family family(Bits f) const {
    std::vector<SetMask> out;
    members(f, out);
    return Family(n_, k_, std::move(out));
  }

  Bits admitted(const DownSet& reach) const {
    Bits out = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (reach.admits(sets_[i])) out |= Bits{1} << i;
    }
    return out;
  }

 private:
  int n_;
  int k_;
  std::vector<SetMask> sets_;
  Bits all_ = 0;
};

// All non-empty shifted subfamilies of the slice. Colex order extends the
// domination order, so deciding members in index order only needs the
// elementary lower covers of each set to be present already.
std::vector<Bits> shifted_families(const Slice& slice) {
  const std::size_t count = slice.count();
  std::vector<Bits> covers(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const SetMask s = slice.set(i);
    SetMask rest = s & ~SetMask{1};
    while (rest != 0) {
      const SetMask bit = rest & (~rest + 1);
      rest &= rest - 1;
      if ((s & (bit >> 1)) == 0) covers[i] |= Bits{1} << slice.index_of((s & ~bit) | (bit >> 1));
    }
  }
  std::vector<Bits> out;
  auto visit = [&](auto&& self, std::size_t i, Bits chosen) -> void {
    if (i == count) {
      if (chosen != 0) out.push_back(chosen);
      return;
    }
    self(self, i + 1, chosen);
    if ((covers[i] & chosen) == covers[i]) self(self, i + 1, chosen | (Bits{1} << i));
  };
  visit(visit, 0, 0);
  std::sort(out.begin(), out.end(), [](Bits a, Bits b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a > b;
  });
  return out;
}

std::vector<Bits> canonical_order(std::vector<Bits> chain) {
  std::sort(chain.begin(), chain.end(), [](Bits a, Bits b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a > b;
  });
  return chain;
}

FamilyTuple to_tuple(const Slice& slice, const std::vector<Bits>& chain) {
  std::vector<Family> fams;
  fams.reserve(chain.size());
  for (Bits f : chain) fams.push_back(slice.family(f));
  return FamilyTuple(std::move(fams));
}

void require_star_feasible(int n, int k, int s) {
  if (!is_cross_union(star_tuple(n, k, s, n))) {
    throw std::logic_error("star tuple is not cross-union for these parameters");
  }
}

struct Leaf {
  std::uint64_t total;
  std::vector<Bits> chain;
};

struct WorkerState {
  std::uint64_t explored = 0;
  std::uint64_t pruned_circle = 0;
  std::uint64_t pruned_rwise = 0;
  std::uint64_t pruned_g0_lower = 0;
  std::uint64_t pruned_capacity = 0;
  std::vector<Leaf> leaves;
  std::vector<Bits> chain;
  std::vector<SetMask> buffer;
};

class ReducedSearch {
 public:
  ReducedSearch(const BoundContext& ctx, const SearchOptions& options)
      : ctx_(ctx), options_(options), slice_(ctx.n, ctx.k), ideals_(shifted_families(slice_)) {
    shadow_sizes_.reserve(ideals_.size());
    for (Bits g : ideals_) shadow_sizes_.push_back(shadow(slice_.family(g), ctx_.l).size());
  }

  SearchResult run(std::uint64_t seed) {
    incumbent_.store(seed);
    const unsigned workers = std::max(1U, options_.threads);
    std::vector<WorkerState> states(workers);
    std::atomic<std::size_t> next{0};
    auto work = [&](WorkerState& state) {
      for (std::size_t i = next++; i < ideals_.size(); i = next++) explore_root(state, i);
    };
    if (workers == 1) {
      work(states.front());
    } else {
      std::vector<std::jthread> pool;
      for (auto& state : states) pool.emplace_back([&work, &state] { work(state); });
    }

    SearchResult result;
    result.n = ctx_.n;
    result.k = ctx_.k;
    result.s = ctx_.s;
    result.star_value = ctx_.star_value;
    result.max_sum = incumbent_.load();
    std::set<std::vector<Bits>> maximizers;
    for (auto& state : states) {
      result.nodes_explored += state.explored;
      result.pruned_circle += state.pruned_circle;
      result.pruned_rwise += state.pruned_rwise;
      result.pruned_g0_lower += state.pruned_g0_lower;
      result.pruned_capacity += state.pruned_capacity;
      for (auto& leaf : state.leaves) {
        if (leaf.total == result.max_sum) maximizers.insert(std::move(leaf.chain));
      }
    }
    result.nodes_pruned =
        result.pruned_circle + result.pruned_rwise + result.pruned_g0_lower + result.pruned_capacity;
    for (const auto& chain : maximizers) result.certificates.push_back(to_tuple(slice_, chain));
    std::sort(result.certificates.begin(), result.certificates.end());
    if (result.max_sum == ctx_.star_value) {
      for (int i = 1; i <= ctx_.n; ++i) {
        result.star_certificates.push_back(star_tuple(ctx_.n, ctx_.k, ctx_.s, i));
      }
    }
    if (options_.circle_bound) result.bounds_used.emplace_back("circle");
    if (options_.rwise_bound) result.bounds_used.emplace_back("rwise");
    if (options_.g0_lower_bound) result.bounds_used.emplace_back("g0_lower");
    return result;
  }

 private:
  std::uint64_t incumbent() const { return incumbent_.load(std::memory_order_relaxed); }

  void offer(WorkerState& state, std::uint64_t total, Bits last) {
    std::uint64_t seen = incumbent();
    if (total < seen) return;
    while (total > seen && !incumbent_.compare_exchange_weak(seen, total)) {
    }
    Leaf leaf{total, state.chain};
    leaf.chain.push_back(last);
    state.leaves.push_back(std::move(leaf));
  }

  void explore_root(WorkerState& state, std::size_t index) {
    ++state.explored;
    const Bits g0 = ideals_[index];
    const auto size = static_cast<std::uint64_t>(std::popcount(g0));
    if (options_.rwise_bound && size > ctx_.rwise_cap) {
      ++state.pruned_rwise;
      return;
    }
    if (options_.g0_lower_bound && BigInt(size) < ctx_.g0_lower) {
      ++state.pruned_g0_lower;
      return;
    }
    std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    if (options_.circle_bound) {
      cap = ctx_.circle_total(size, shadow_sizes_[index]);
      if (cap < incumbent()) {
        ++state.pruned_circle;
        return;
      }
    }
    slice_.members(g0, state.buffer);
    const DownSet reach = DownSet(ctx_.n).extend(state.buffer);
    state.chain.assign(1, g0);
    descend(state, 1, g0, reach, size, cap);
  }

  void descend(WorkerState& state, int level, Bits prev, const DownSet& reach, std::uint64_t sum,
               std::uint64_t cap) {
    ++state.explored;
    const Bits admitted = slice_.admitted(reach);
    if ((prev & ~admitted) != 0) {
      ++state.pruned_capacity;
      return;
    }
    const auto room = static_cast<std::uint64_t>(std::popcount(admitted));
    if (level == ctx_.s) {
      offer(state, sum + room, admitted);
      return;
    }
    const std::uint64_t structural = sum + static_cast<std::uint64_t>(ctx_.s - level + 1) * room;
    if (structural < incumbent()) {
      ++state.pruned_capacity;
      return;
    }
    if (cap < incumbent()) {
      ++state.pruned_circle;
      return;
    }
    for (Bits g : ideals_) {
      if ((g & prev) != prev || (g & ~admitted) != 0) continue;
      slice_.members(g, state.buffer);
      const DownSet next = reach.extend(state.buffer);
      if (next.covers()) continue;
      state.chain.push_back(g);
      descend(state, level + 1, g, next, sum + static_cast<std::uint64_t>(std::popcount(g)), cap);
      state.chain.pop_back();
    }
  }

  BoundContext ctx_;
  SearchOptions options_;
  Slice slice_;
  std::vector<Bits> ideals_;
  std::vector<std::uint64_t> shadow_sizes_;
  std::atomic<std::uint64_t> incumbent_{0};
};

class RawSearch {
 public:
  RawSearch(int n, int k, int s, bool collect, std::uint64_t seed_value, std::uint64_t cap)
      : slice_(n, k), s_(s), collect_(collect), best_(seed_value), cap_(cap) {}

  RawResult run() {
    level(0, 0, DownSet(slice_.n()), 0);
    RawResult result;
    result.max_sum = best_;
    result.nodes = nodes_;
    std::set<std::vector<Bits>> unique;
    for (auto& chain : found_) unique.insert(canonical_order(std::move(chain)));
    for (const auto& chain : unique) result.maximizers.push_back(to_tuple(slice_, chain));
    std::sort(result.maximizers.begin(), result.maximizers.end());
    return result;
  }

 private:
  void consider(std::uint64_t total, Bits last) {
    if (total > best_) {
      best_ = total;
      found_.clear();
    }
    if (collect_ && total == best_) {
      found_.push_back(chain_);
      found_.back().push_back(last);
    }
  }

  bool hopeless(std::uint64_t bound) const {
    bound = std::min(bound, cap_);
    return collect_ ? bound < best_ : bound <= best_;
  }

  // Levels 0..s-1 take F_0 >= F_1 >= ... in (size, colex rank) order; level s
  // takes every set the earlier families admit.
  void level(int j, Bits prev, const DownSet& reach, std::uint64_t sum) {
    ++nodes_;
    const Bits admitted = slice_.admitted(reach);
    const int room = std::popcount(admitted);
    if (j == s_) {
      if (admitted != 0) consider(sum + static_cast<std::uint64_t>(room), admitted);
      return;
    }
    std::vector<int> positions;
    for (Bits rest = admitted; rest != 0; rest &= rest - 1) positions.push_back(std::countr_zero(rest));
    const int prev_size = std::popcount(prev);
    const int top = j == 0 ? room : std::min(room, prev_size);
    std::vector<SetMask> buffer;
    for (int m = top; m >= 1; --m) {
      const std::uint64_t bound =
          sum + static_cast<std::uint64_t>(s_ - j) * static_cast<std::uint64_t>(m) +
          static_cast<std::uint64_t>(room);
      if (hopeless(bound)) break;
      // Gosper over m-subsets of the admitted positions.
      std::uint64_t pick = (std::uint64_t{1} << m) - 1;
      const std::uint64_t limit = std::uint64_t{1} << room;
      while (pick < limit) {
        Bits f = 0;
        for (std::uint64_t p = pick; p != 0; p &= p - 1) {
          f |= Bits{1} << positions[static_cast<std::size_t>(std::countr_zero(p))];
        }
        if (!(j > 0 && m == prev_size && f > prev)) {
          slice_.members(f, buffer);
          const DownSet next = reach.extend(buffer);
          if (!next.covers()) {
            chain_.push_back(f);
            level(j + 1, f, next, sum + static_cast<std::uint64_t>(m));
            chain_.pop_back();
          }
        }
        const std::uint64_t low = pick & (~pick + 1);
        const std::uint64_t ripple = pick + low;
        pick = (((ripple ^ pick) >> 2) / low) | ripple;
      }
    }
  }

  Slice slice_;
  int s_;
  bool collect_;
  std::uint64_t best_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<Bits> chain_;
  std::vector<std::vector<Bits>> found_;
};

void check_raw_parameters(int n, int k, int s) {
  check_search_parameters(n, k, s);
  if (binom(n, k) > kRawMaxSlice) {
    throw std::invalid_argument("raw search limited to C(n, k) <= " + std::to_string(kRawMaxSlice));
  }
}

}  // namespace

std::uint64_t BoundContext::circle_total(std::uint64_t g0_size, std::uint64_t g0_shadow) const {
  const BigInt numerator = BigInt(slice) * (BigInt(s) * low_slice - g0_shadow);
  if (numerator < 0) return g0_size;
  const BigInt rest = numerator / low_slice;
  return g0_size + rest.convert_to<std::uint64_t>();
}

BoundContext make_bound_context(int n, int k, int s) {
  check_search_parameters(n, k, s);
  BoundContext ctx;
  ctx.n = n;
  ctx.k = k;
  ctx.s = s;
  ctx.l = n - s * k;
  ctx.slice = binom_u64(n, k);
  ctx.low_slice = binom_u64(n, ctx.l);
  ctx.rwise_cap = binom_u64(n - 1, k);
  ctx.star_value = static_cast<std::uint64_t>(s + 1) * ctx.rwise_cap;
  ctx.g0_lower = BigInt(s + 1) * binom(n - 1, k) - BigInt(s) * binom(n, k) + binom(k * s, k);
  return ctx;
}

void check_search_parameters(int n, int k, int s) {
  if (s < 1 || k < 1) throw std::invalid_argument("search needs s >= 1 and k >= 1");
  if (!(s * k < n && n <= (s + 1) * k)) throw std::invalid_argument("search needs sk < n <= (s+1)k");
  if (n > kMaxEnumerationUniverse) throw std::invalid_argument("search needs n <= 24");
  if (binom(n, k) > kSearchMaxSlice) {
    throw std::invalid_argument("search needs C(n, k) <= " + std::to_string(kSearchMaxSlice));
  }
}

FamilyTuple star_tuple(int n, int k, int s, int avoid) {
  return FamilyTuple(std::vector<Family>(static_cast<std::size_t>(s) + 1, Family::star(n, k, avoid)));
}

SearchResult max_sum_search(int n, int k, int s, const SearchOptions& options) {
  const BoundContext ctx = make_bound_context(n, k, s);
  require_star_feasible(n, k, s);
  ReducedSearch search(ctx, options);
  SearchResult result = search.run(ctx.star_value);
  if (result.max_sum > ctx.star_value) {
    // The incumbent moved during the first pass, so its counters depend on the
    // schedule. Rerun from the final value, where they do not.
    result = search.run(result.max_sum);
    result.passes = 2;
  }
  return result;
}

RawResult raw_max_search(int n, int k, int s, bool collect_maximizers, bool seed_with_star,
                         bool averaging_cap) {
  check_raw_parameters(n, k, s);
  std::uint64_t seed = 0;
  if (seed_with_star) {
    require_star_feasible(n, k, s);
    seed = static_cast<std::uint64_t>(s + 1) * binom_u64(n - 1, k);
  }
  const std::uint64_t cap = averaging_cap ? static_cast<std::uint64_t>(s) * binom_u64(n, k)
                                          : std::numeric_limits<std::uint64_t>::max();
  return RawSearch(n, k, s, collect_maximizers, seed, cap).run();
}

std::vector<FamilyTuple> nested_tuples_at_least(int n, int k, int s, std::uint64_t target) {
  check_raw_parameters(n, k, s);
  const Slice slice(n, k);
  std::vector<FamilyTuple> out;
  std::vector<Bits> chain;
  std::vector<SetMask> buffer;
  auto level = [&](auto&& self, int j, Bits prev, const DownSet& reach, std::uint64_t sum) -> void {
    const Bits admitted = slice.admitted(reach);
    if ((prev & ~admitted) != 0) return;
    const auto room = static_cast<std::uint64_t>(std::popcount(admitted));
    if (j == s) {
      if (sum + room >= target) {
        chain.push_back(admitted);
        out.push_back(to_tuple(slice, chain));
        chain.pop_back();
      }
      return;
    }
    if (sum + static_cast<std::uint64_t>(s - j + 1) * room < target) return;
    const Bits free = admitted & ~prev;
    Bits extra = free;
    while (true) {
      const Bits f = prev | extra;
      if (f != 0) {
        slice.members(f, buffer);
        const DownSet next = reach.extend(buffer);
        if (!next.covers()) {
          chain.push_back(f);
          self(self, j + 1, f, next, sum + static_cast<std::uint64_t>(std::popcount(f)));
          chain.pop_back();
        }
      }
      if (extra == 0) break;
      extra = (extra - 1) & free;
    }
  };
  level(level, 0, 0, DownSet(n), 0);
  std::sort(out.begin(), out.end());
  return out;
}

MainTheoremReport verify_main_theorem(int n, int k, int s, const SearchOptions& options) {
  const int l = n - s * k;
  if (l < 1 || l > k) throw std::invalid_argument("main theorem needs n = sk + l with 1 <= l <= k");
  if (s < 4 * l) throw std::invalid_argument("main theorem needs s >= 4l");
  check_search_parameters(n, k, s);

  MainTheoremReport report;
  report.n = n;
  report.k = k;
  report.s = s;
  report.l = l;
  const SearchResult search = max_sum_search(n, k, s, options);
  report.max_sum = search.max_sum;
  report.star_value = search.star_value;
  report.value_matches = search.max_sum == search.star_value;

  auto is_star_tuple = [](const FamilyTuple& t) {
    const auto sig = star_signature(t[0]);
    if (!sig) return false;
    const auto fams = t.families();
    return std::all_of(fams.begin(), fams.end(), [&](const Family& f) { return f == fams.front(); });
  };

  if (binom(n, k) <= kUnreducedUniquenessSlice) {
    const RawResult raw = raw_max_search(n, k, s, true);
    report.unreduced = true;
    report.maximizers_checked = raw.maximizers.size();
    report.all_maximizers_are_stars = raw.max_sum == search.max_sum && !raw.maximizers.empty() &&
                                      std::all_of(raw.maximizers.begin(), raw.maximizers.end(),
                                                  is_star_tuple);
  } else {
    report.unreduced = false;
    report.maximizers_checked = search.certificates.size();
    report.all_maximizers_are_stars =
        !search.certificates.empty() &&
        std::all_of(search.certificates.begin(), search.certificates.end(), is_star_tuple);
  }
  report.holds = report.value_matches && report.all_maximizers_are_stars;
  return report;
}

Question41Report explore_question41(int n, int k, int s, const SearchOptions& options) {
  const int l = n - s * k;
  if (!(0 < l && l < k)) throw std::invalid_argument("question41 needs n = sk + l with 0 < l < k");
  Question41Report report;
  report.n = n;
  report.k = k;
  report.s = s;
  report.l = l;
  report.max_sum = max_sum_search(n, k, s, options).max_sum;
  report.star_candidate = BigInt(s + 1) * binom(n - 1, k);
  BigInt excluded = 0;
  for (int i = 0; i <= k - l; ++i) excluded += binom(k, i) * binom(n - k, k - i);
  report.example_candidate = 1 + BigInt(s) * binom(n, k) - excluded;
  report.larger_candidate = std::max(report.star_candidate, report.example_candidate);
  report.equals_larger = BigInt(report.max_sum) == report.larger_candidate;
  report.exceeds_larger = BigInt(report.max_sum) > report.larger_candidate;
  return report;
}

}  // namespace crossunion
