#include "crossunion/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <iterator>
#include <stdexcept>
#include <thread>

#include "crossunion/combinat.hpp"
#include "crossunion/family.hpp"

namespace crossunion {

namespace {

void settle(InequalityRecord& r) {
  r.strict = r.lhs > r.rhs;
  switch (r.relation) {
    case Relation::AtLeast: r.holds = r.lhs >= r.rhs; break;
    case Relation::Greater: r.holds = r.strict; break;
    case Relation::Equal: r.holds = r.lhs == r.rhs; break;
  }
}

std::vector<std::pair<std::string, std::string>> int_params(
    std::initializer_list<std::pair<const char*, long long>> values) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, value] : values) out.emplace_back(key, std::to_string(value));
  return out;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
// results in index order.
template <typename Fn>
auto run_points(std::size_t count, unsigned threads, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> results(count);
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
      });
    }
  }
  return results;
}

void note_failure(GridSummary& summary, const InequalityRecord& record) {
  ++summary.violations;
  if (summary.failures.size() < kGridFailureSample) summary.failures.push_back(record);
}

void merge_into(GridSummary& total, GridSummary&& part) {
  total.points += part.points;
  total.applicable += part.applicable;
  total.violations += part.violations;
  total.equality_mismatches += part.equality_mismatches;
  for (auto& [label, count] : part.tallies) {
    auto it = std::find_if(total.tallies.begin(), total.tallies.end(),
                           [&](const auto& t) { return t.first == label; });
    if (it == total.tallies.end()) {
      total.tallies.emplace_back(label, count);
    } else {
      it->second += count;
    }
  }
  for (auto& f : part.failures) {
    if (total.failures.size() < kGridFailureSample) total.failures.push_back(std::move(f));
  }
  std::move(part.records.begin(), part.records.end(), std::back_inserter(total.records));
}

// The comparison itself, from the two normalized slice ratios.
SlicesCheck slices_from_ratios(int n, int k, int l, const BigRational& x0, const BigRational& ratio_l,
                               const BigRational& ratio_k) {
  SlicesCheck out;
  out.record.name = "lemma27";
  out.record.lhs = ratio_l;
  out.record.rhs = ratio_k + BigRational(k - l, n);
  settle(out.record);
  out.hypothesis = ratio_l * l <= ratio_k * k;
  out.record.applicable = out.hypothesis;
  out.equality = out.record.lhs == out.record.rhs;
  out.equality_expected = l == k || x0 == BigRational(n - 1);
  out.consistent = !out.hypothesis || (out.record.holds && out.equality == out.equality_expected);
  return out;
}

void slices_params(SlicesCheck& check, int n, int k, int l, const BigRational& x0) {
  check.record.parameters = int_params({{"n", n}, {"k", k}, {"l", l}});
  check.record.parameters.emplace_back("x0", to_string(x0));
}

// 2 atanh(y) = ln((1+y)/(1-y)) for 0 <= y < 1, as a certified enclosure.
std::pair<BigRational, BigRational> two_atanh(const BigRational& y, int terms) {
  BigRational sum = 0;
  BigRational power = y;
  const BigRational y2 = y * y;
  for (int j = 0; j < terms; ++j) {
    sum += power / (2 * j + 1);
    power *= y2;
  }
  // Remaining terms are bounded by a geometric series with ratio y^2.
  const BigRational tail = power / ((2 * terms + 1) * (1 - y2));
  return {2 * sum, 2 * (sum + tail)};
}

}  // namespace

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::AtLeast: return ">=";
    case Relation::Greater: return ">";
    case Relation::Equal: return "==";
  }
  return "?";
}

std::pair<InequalityRecord, InequalityRecord> check_lemma_computation(int k, int l, int s) {
  if (!(1 <= l && l <= k)) throw std::invalid_argument("lemma26 needs 1 <= l <= k");
  if (s < 4 * l) throw std::invalid_argument("lemma26 needs s >= 4l");
  const long long n = static_cast<long long>(k) * s + l;
  const BigInt lhs = BigInt(s + 1) * binom(n - 1, k) - BigInt(s) * binom(n, k) +
                     binom(static_cast<long long>(k) * s, k);
  const bool first = k >= 2 * l;

  InequalityRecord one;
  one.name = "lemma26_i";
  one.parameters = int_params({{"k", k}, {"l", l}, {"s", s}, {"n", n}});
  one.lhs = BigRational(lhs);
  one.rhs = BigRational(BigInt(l) * binom(n, k), BigInt(k));
  one.applicable = first;
  settle(one);

  InequalityRecord two;
  two.name = "lemma26_ii";
  two.parameters = one.parameters;
  two.lhs = one.lhs;
  two.rhs = binom_rational(BigRational(n * (k - 1), k) + 1, k);
  two.applicable = !first;
  settle(two);
  return {std::move(one), std::move(two)};
}

const InequalityRecord& applicable_case(const std::pair<InequalityRecord, InequalityRecord>& cases) {
  return cases.first.applicable ? cases.first : cases.second;
}

SlicesCheck check_different_slices(int n, int k, int l, const BigRational& x0) {
  if (!(1 <= l && l <= k && k < n)) throw std::invalid_argument("lemma27 needs 1 <= l <= k < n");
  if (x0 < k || x0 > n - 1) throw std::invalid_argument("lemma27 needs k <= x0 <= n-1");
  const BigRational ratio_l = binom_rational(x0, l) / BigRational(binom(n, l));
  const BigRational ratio_k = binom_rational(x0, k) / BigRational(binom(n, k));
  SlicesCheck out = slices_from_ratios(n, k, l, x0, ratio_l, ratio_k);
  slices_params(out, n, k, l, x0);
  return out;
}

std::pair<BigRational, BigRational> ln_bounds(const BigRational& x, int terms) {
  if (x < 1) throw std::invalid_argument("ln_bounds needs x >= 1");
  if (terms < 1) throw std::invalid_argument("ln_bounds needs terms >= 1");
  int halvings = 0;
  BigRational r = x;
  while (r >= 2) {
    r /= 2;
    ++halvings;
  }
  auto [lo, hi] = two_atanh((r - 1) / (r + 1), terms);
  if (halvings > 0) {
    const auto [lo2, hi2] = two_atanh(BigRational(1, 3), terms);
    lo += lo2 * halvings;
    hi += hi2 * halvings;
  }
  return {lo, hi};
}

Example13Report example13_sum(int k, int c, int s) {
  if (s < 2) throw std::invalid_argument("example13 needs s >= 2");
  if (c < 1) throw std::invalid_argument("example13 needs c >= 1");
  if (k - c < 1) throw std::invalid_argument("example13 needs k = l + c with l >= 1");
  Example13Report r;
  r.k = k;
  r.c = c;
  r.s = s;
  r.l = k - c;
  const long long n = static_cast<long long>(s) * k + r.l;
  r.n = static_cast<int>(n);

  BigInt low_meet = 0;
  for (int i = 0; i <= c; ++i) low_meet += binom(k, i) * binom(n - k, k - i);
  r.family1_size = binom(n, k) - low_meet;

  r.record.name = "example13";
  r.record.parameters = int_params({{"k", k}, {"c", c}, {"s", s}, {"l", r.l}, {"n", n}});
  r.record.relation = Relation::Greater;
  r.record.lhs = BigRational(1 + r.family1_size + BigInt(s - 1) * binom(n, k));
  r.record.rhs = BigRational(BigInt(s + 1) * binom(n - 1, k));
  settle(r.record);

  // (s+1)(c+2) ln k < k, refined until the enclosure decides it (ln k is irrational).
  const BigRational factor = BigRational((s + 1) * (c + 2));
  for (int terms = 20;; terms *= 2) {
    const auto [lo, hi] = ln_bounds(BigRational(k), terms);
    if (factor * hi < k) {
      r.intro_condition = true;
      break;
    }
    if (factor * lo >= k) {
      r.intro_condition = false;
      break;
    }
  }

  if (n <= kExample13ExhaustiveN) {
    const int nn = r.n;
    SetMask head = 0;
    for (int e = 0; e < k; ++e) head |= SetMask{1} << e;
    std::vector<SetMask> meet;
    for (SetMask a : all_k_subsets(nn, k)) {
      if (std::popcount(a & head) >= c + 1) meet.push_back(a);
    }
    std::vector<Family> fams;
    fams.emplace_back(nn, k, std::vector<SetMask>{head});
    fams.emplace_back(nn, k, std::move(meet));
    for (int i = 2; i <= s; ++i) fams.push_back(Family::complete(nn, k));
    r.cross_union = is_cross_union(FamilyTuple(std::move(fams)));
    r.exhaustive = true;
  } else {
    // Any transversal union has at most k + (k - c - 1) + (s - 1)k = n - 1 elements.
    r.cross_union = static_cast<long long>(k) + (k - c - 1) + static_cast<long long>(s - 1) * k < n;
    r.exhaustive = false;
  }
  return r;
}

InequalityRecord check_eq1_identity(int n, int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("eq1 needs k >= 1 and s >= 1");
  const long long l = n - static_cast<long long>(k) * s;
  if (!(1 <= l && l <= k)) throw std::invalid_argument("eq1 needs n = ks + l with 1 <= l <= k");
  InequalityRecord r;
  r.name = "eq1";
  r.parameters = int_params({{"n", n}, {"k", k}, {"s", s}, {"l", l}});
  r.relation = Relation::Equal;
  r.lhs = BigRational(BigInt(s + 1) * binom(n - 1, k), binom(n, k));
  r.rhs = BigRational(s) - BigRational(k - l, n);
  settle(r);
  return r;
}

GridSummary lemma26_grid(int k_max, int s_span, unsigned threads, bool keep_records) {
  std::vector<std::pair<int, int>> kl;
  for (int k = 1; k <= k_max; ++k) {
    for (int l = 1; l <= k; ++l) kl.emplace_back(k, l);
  }
  auto parts = run_points(kl.size(), threads, [&](std::size_t i) {
    const auto [k, l] = kl[i];
    GridSummary part;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    for (int s = 4 * l; s <= 4 * l + s_span; ++s) {
      const auto cases = check_lemma_computation(k, l, s);
      const InequalityRecord& r = applicable_case(cases);
      ++part.points;
      ++part.applicable;
      ++(cases.first.applicable ? first : second);
      if (!r.holds) note_failure(part, r);
      if (keep_records) part.records.push_back(r);
    }
    part.tallies = {{"case_i", first}, {"case_ii", second}};
    return part;
  });
  GridSummary total;
  total.name = "lemma26";
  for (auto& p : parts) merge_into(total, std::move(p));
  return total;
}

GridSummary lemma27_grid(int n_max, unsigned threads, bool keep_records) {
  const std::size_t count = n_max >= 2 ? static_cast<std::size_t>(n_max - 1) : 0;
  auto parts = run_points(count, threads, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 2;
    GridSummary part;
    std::vector<BigRational> slice_sizes(static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j) slice_sizes[static_cast<std::size_t>(j)] = BigRational(binom(n, j));
    std::vector<BigRational> ratio(static_cast<std::size_t>(n));
    std::uint64_t hypothesis_points = 0;
    for (int twice = 2; twice <= 2 * (n - 1); ++twice) {
      const BigRational x0(twice, 2);
      // ratio[j] = C(x0, j) / C(n, j), built up one factor at a time.
      BigRational falling = 1;
      const int top = std::min(n - 1, twice / 2);
      for (int j = 1; j <= top; ++j) {
        falling = falling * (x0 - (j - 1)) / j;
        ratio[static_cast<std::size_t>(j)] = falling / slice_sizes[static_cast<std::size_t>(j)];
      }
      for (int k = 1; k <= top; ++k) {
        for (int l = 1; l <= k; ++l) {
          SlicesCheck check = slices_from_ratios(n, k, l, x0, ratio[static_cast<std::size_t>(l)],
                                                 ratio[static_cast<std::size_t>(k)]);
          ++part.points;
          if (!check.hypothesis) continue;
          ++part.applicable;
          ++hypothesis_points;
          if (keep_records) {
            slices_params(check, n, k, l, x0);
            part.records.push_back(check.record);
          }
          if (!check.record.holds || check.equality != check.equality_expected) {
            slices_params(check, n, k, l, x0);
            if (!check.record.holds) note_failure(part, check.record);
            if (check.equality != check.equality_expected) {
              ++part.equality_mismatches;
              if (check.record.holds && part.failures.size() < kGridFailureSample) {
                part.failures.push_back(check.record);
              }
            }
          }
        }
      }
    }
    part.tallies = {{"hypothesis_holds", hypothesis_points}};
    return part;
  });
  GridSummary total;
  total.name = "lemma27";
  for (auto& p : parts) merge_into(total, std::move(p));
  return total;
}

GridSummary eq1_grid(int k_max, int s_max, unsigned threads, bool keep_records) {
  auto parts = run_points(static_cast<std::size_t>(std::max(k_max, 0)), threads, [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    GridSummary part;
    for (int s = 1; s <= s_max; ++s) {
      for (int l = 1; l <= k; ++l) {
        const InequalityRecord r = check_eq1_identity(k * s + l, k, s);
        ++part.points;
        ++part.applicable;
        if (!r.holds) note_failure(part, r);
        if (keep_records) part.records.push_back(r);
      }
    }
    return part;
  });
  GridSummary total;
  total.name = "eq1";
  for (auto& p : parts) merge_into(total, std::move(p));
  return total;
}

}  // namespace crossunion
