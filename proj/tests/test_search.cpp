#include <doctest.h>

#include "crossunion/circle.hpp"
#include "crossunion/combinat.hpp"
#include "crossunion/compression.hpp"
#include "crossunion/search.hpp"
#include "oracles.hpp"

using namespace crossunion;

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(max_sum_search(3, 1, 3), std::invalid_argument);   // n = sk
  CHECK_THROWS_AS(max_sum_search(7, 1, 2), std::invalid_argument);   // n > (s+1)k
  CHECK_THROWS_AS(max_sum_search(9, 3, 2), std::invalid_argument);   // C(9,3) = 84 > 40
  CHECK_THROWS_AS(max_sum_search(5, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(raw_max_search(7, 3, 2), std::invalid_argument);   // C(7,3) = 35 > 16
}

TEST_CASE("bound context") {
  const BoundContext ctx = make_bound_context(9, 2, 4);
  CHECK(ctx.l == 1);
  CHECK(ctx.slice == 36);
  CHECK(ctx.low_slice == 9);
  CHECK(ctx.star_value == 5 * 28);
  CHECK(ctx.rwise_cap == 28);
  CHECK(ctx.g0_lower == BigInt(5 * 28 - 4 * 36 + 28));
  // The star's first family has a full shadow at level l, leaving room for s-1 more full slices.
  CHECK(ctx.circle_total(28, 8) == 28 + (36 * (4 * 9 - 8)) / 9);
}

TEST_CASE("tiny maxima against full brute force") {
  for (const auto& [n, k, s] : {std::tuple{3, 1, 2}, std::tuple{4, 2, 1}, std::tuple{3, 2, 1},
                                std::tuple{2, 1, 1}, std::tuple{4, 3, 1}}) {
    const std::uint64_t expected = oracle::brute_max(n, k, s);
    CAPTURE(n);
    CAPTURE(k);
    CAPTURE(s);
    CHECK(max_sum_search(n, k, s).max_sum == expected);
    CHECK(raw_max_search(n, k, s).max_sum == expected);
    CHECK(raw_max_search(n, k, s, false, false).max_sum == expected);
    CHECK(raw_max_search(n, k, s, false, true, true).max_sum == expected);
  }
}

TEST_CASE("frozen maxima") {
  CHECK(max_sum_search(3, 1, 2).max_sum == 6);
  CHECK(max_sum_search(4, 2, 1).max_sum == 6);
  CHECK(max_sum_search(5, 1, 4).max_sum == 20);
  CHECK(max_sum_search(6, 1, 5).max_sum == 30);
  CHECK(max_sum_search(4, 1, 3).max_sum == 12);
  CHECK(max_sum_search(5, 4, 1).max_sum == 2);
}

TEST_CASE("certificates are cross-union maximizers in canonical order") {
  for (const auto& [n, k, s] : {std::tuple{5, 1, 4}, std::tuple{6, 2, 2}, std::tuple{5, 2, 2},
                                std::tuple{7, 3, 2}, std::tuple{9, 2, 4}}) {
    const SearchResult r = max_sum_search(n, k, s);
    CHECK(r.max_sum >= r.star_value);
    CHECK(r.max_sum <= static_cast<std::uint64_t>(s + 1) * binom_u64(n, k));
    // Averaging bound: the total is at most s C(n,k).
    CHECK(r.max_sum <= static_cast<std::uint64_t>(s) * binom_u64(n, k));
    REQUIRE_FALSE(r.certificates.empty());
    CHECK(std::is_sorted(r.certificates.begin(), r.certificates.end()));
    for (const auto& c : r.certificates) {
      CHECK(c.total_size() == r.max_sum);
      CHECK(is_cross_union(c));
      CHECK(is_nested(c.families()));
      for (const auto& f : c.families()) CHECK(is_shifted(f));
    }
    if (r.max_sum == r.star_value) {
      CHECK(r.star_certificates.size() == static_cast<std::size_t>(n));
      for (const auto& t : r.star_certificates) CHECK(is_cross_union(t));
    }
  }
}

TEST_CASE("the (5,1,4) maximizers are exactly the five stars") {
  const SearchResult r = max_sum_search(5, 1, 4);
  CHECK(r.max_sum == 20);
  REQUIRE(r.certificates.size() == 1);
  CHECK(star_signature(r.certificates.front()[0]) == 5);
  const RawResult raw = raw_max_search(5, 1, 4, true);
  CHECK(raw.max_sum == 20);
  REQUIRE(raw.maximizers.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(raw.maximizers[static_cast<std::size_t>(i)] == star_tuple(5, 1, 4, 5 - i));
  // Unseeded the search must find the same set.
  CHECK(raw_max_search(5, 1, 4, true, false).maximizers == raw.maximizers);
}

TEST_CASE("every bound is sound on its own") {
  for (const auto& [n, k, s] : {std::tuple{5, 2, 2}, std::tuple{6, 2, 2}, std::tuple{7, 3, 2},
                                std::tuple{9, 2, 4}, std::tuple{6, 3, 1}, std::tuple{7, 1, 6}}) {
    const SearchResult all = max_sum_search(n, k, s);
    for (int mask = 0; mask < 8; ++mask) {
      const SearchOptions opt{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, 1};
      const SearchResult r = max_sum_search(n, k, s, opt);
      CHECK(r.max_sum == all.max_sum);
      CHECK(r.certificates == all.certificates);
      if (mask == 7) CHECK(r.nodes_explored == all.nodes_explored);
      if (mask == 0) CHECK(r.nodes_explored >= all.nodes_explored);
    }
  }
}

TEST_CASE("threads change nothing") {
  for (const auto& [n, k, s] : {std::tuple{7, 3, 2}, std::tuple{9, 2, 4}, std::tuple{8, 1, 7}}) {
    const SearchResult one = max_sum_search(n, k, s, SearchOptions{true, true, true, 1});
    const SearchResult four = max_sum_search(n, k, s, SearchOptions{true, true, true, 4});
    CHECK(one.max_sum == four.max_sum);
    CHECK(one.certificates == four.certificates);
    CHECK(one.nodes_explored == four.nodes_explored);
    CHECK(one.nodes_pruned == four.nodes_pruned);
  }
}

TEST_CASE("nested enumeration at the maximum matches the raw maximizers up to order") {
  const std::uint64_t best = raw_max_search(5, 2, 2).max_sum;
  const auto nested = nested_tuples_at_least(5, 2, 2, best);
  CHECK_FALSE(nested.empty());
  for (const auto& t : nested) {
    CHECK(t.total_size() == best);
    CHECK(is_nested(t.families()));
    CHECK(is_cross_union(t));
  }
  CHECK(nested_tuples_at_least(5, 2, 2, best + 1).empty());
}

TEST_CASE("nested maximizer checks") {
  const MainTheoremReport a = verify_main_theorem(5, 1, 4);
  CHECK(a.holds);
  CHECK(a.unreduced);
  CHECK(a.maximizers_checked == 5);
  const MainTheoremReport b = verify_main_theorem(6, 1, 5);
  CHECK(b.holds);
  CHECK(b.max_sum == 30);
  const MainTheoremReport c = verify_main_theorem(9, 2, 4);
  CHECK(c.holds);
  CHECK_FALSE(c.unreduced);
  CHECK(c.max_sum == 140);
  CHECK_THROWS_AS(verify_main_theorem(3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_main_theorem(10, 2, 4), std::invalid_argument);  // l = 2 needs s >= 8
}

TEST_CASE("intermediate-range candidates") {
  const Question41Report a = explore_question41(5, 2, 2);
  CHECK(a.star_candidate == 18);
  CHECK(a.example_candidate == 12);
  CHECK(a.larger_candidate == 18);
  CHECK(a.max_sum == 18);
  CHECK(a.equals_larger);
  const Question41Report b = explore_question41(7, 3, 2);
  CHECK(b.star_candidate == 60);
  CHECK(b.example_candidate == 37);
  CHECK(b.max_sum == 60);
  CHECK_THROWS_AS(explore_question41(6, 2, 2), std::invalid_argument);  // l = k
}
