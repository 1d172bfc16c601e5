#include <doctest.h>

#include <cmath>

#include "crossunion/combinat.hpp"
#include "crossunion/verify.hpp"

using namespace crossunion;

TEST_CASE("smallest-family bound routes to the right case") {
  const auto a = check_lemma_computation(4, 2, 8);
  CHECK(a.first.applicable);
  CHECK_FALSE(a.second.applicable);
  CHECK(applicable_case(a).holds);
  // n = 34: 9 C(33,4) - 8 C(34,4) + C(32,4) against (1/2) C(34,4).
  CHECK(a.first.lhs == BigRational(9 * 40920 - 8 * 46376 + 35960));
  CHECK(a.first.rhs == BigRational(46376, 2));

  const auto b = check_lemma_computation(3, 2, 8);
  CHECK(b.second.applicable);
  CHECK(applicable_case(b).holds);
  // n = 26, point (2/3) 26 + 1 = 55/3.
  CHECK(b.second.rhs == binom_rational(BigRational(55, 3), 3));

  const auto c = check_lemma_computation(1, 1, 4);
  CHECK(c.second.applicable);
  CHECK(c.second.lhs == 4);
  CHECK(c.second.rhs == 1);
  CHECK(c.second.holds);

  CHECK_THROWS_AS(check_lemma_computation(3, 2, 7), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_computation(2, 3, 12), std::invalid_argument);
}

TEST_CASE("slice comparison equality cases") {
  for (int x = 3; x <= 9; ++x) {
    const SlicesCheck same = check_different_slices(10, 3, 3, BigRational(x));
    CHECK(same.hypothesis);
    CHECK(same.equality);
    CHECK(same.consistent);
  }
  for (int l = 1; l < 5; ++l) {
    const SlicesCheck top = check_different_slices(12, 5, l, BigRational(11));
    CHECK(top.hypothesis);
    CHECK(top.equality);
    CHECK(top.equality_expected);
    CHECK(top.consistent);
    CHECK(top.record.rhs - BigRational(binom(11, 5), binom(12, 5)) == BigRational(5 - l, 12));
  }
  const SlicesCheck mid = check_different_slices(20, 4, 2, BigRational(10));
  CHECK(mid.consistent);
  if (mid.hypothesis) CHECK(mid.record.strict);
  CHECK_THROWS_AS(check_different_slices(10, 3, 2, BigRational(2)), std::invalid_argument);
  CHECK_THROWS_AS(check_different_slices(10, 3, 2, BigRational(19, 2)), std::invalid_argument);
  CHECK_THROWS_AS(check_different_slices(10, 3, 4, BigRational(5)), std::invalid_argument);
}

TEST_CASE("certified logarithm") {
  for (int x : {1, 2, 3, 10, 60, 1000, 123457}) {
    const auto [lo, hi] = ln_bounds(BigRational(x));
    CHECK(lo <= hi);
    CHECK(to_double(lo) <= std::log(x) + 1e-12);
    CHECK(to_double(hi) >= std::log(x) - 1e-12);
    CHECK(to_double(hi - lo) < 1e-15);
  }
  const auto [lo, hi] = ln_bounds(BigRational(1));
  CHECK(lo == 0);
  CHECK(hi == 0);
  CHECK_THROWS_AS(ln_bounds(BigRational(1, 2)), std::invalid_argument);
}

TEST_CASE("shifted-star construction") {
  const Example13Report small = example13_sum(2, 1, 2);
  CHECK(small.n == 5);
  CHECK(small.family1_size == 1);
  CHECK(small.record.lhs == 12);
  CHECK(small.record.rhs == 18);
  CHECK_FALSE(small.record.holds);
  CHECK(small.cross_union);
  CHECK(small.exhaustive);

  const Example13Report big = example13_sum(60, 1, 3);
  CHECK(big.n == 239);
  CHECK(big.record.rhs == BigRational(4 * binom(238, 60)));
  CHECK(big.record.lhs == BigRational(1 + 3 * binom(239, 60) - binom(179, 60) - 60 * binom(179, 59)));
  CHECK(big.record.holds);
  CHECK(big.record.strict);
  CHECK(big.intro_condition);
  CHECK(big.cross_union);
  CHECK_FALSE(big.exhaustive);

  // Every instance small enough to enumerate is cross-union.
  for (int k = 2; k <= 5; ++k) {
    for (int c = 1; c < k; ++c) {
      for (int s = 2; s * k + (k - c) <= kExample13ExhaustiveN; ++s) {
        const Example13Report r = example13_sum(k, c, s);
        CHECK(r.exhaustive);
        CHECK(r.cross_union);
      }
    }
  }
  CHECK_THROWS_AS(example13_sum(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(example13_sum(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(example13_sum(3, 0, 2), std::invalid_argument);
}

TEST_CASE("star total identity") {
  const InequalityRecord a = check_eq1_identity(5, 1, 4);
  CHECK(a.holds);
  CHECK(a.lhs == 4);
  const InequalityRecord b = check_eq1_identity(9, 2, 4);
  CHECK(b.lhs == BigRational(35, 9));
  CHECK(b.holds);
  CHECK(check_eq1_identity(14, 3, 4).holds);
  CHECK_THROWS_AS(check_eq1_identity(8, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_eq1_identity(11, 2, 4), std::invalid_argument);
}

TEST_CASE("small grids") {
  const GridSummary g26 = lemma26_grid(6, 4, 2, true);
  CHECK(g26.violations == 0);
  CHECK(g26.points == 21 * 5);
  CHECK(g26.records.size() == g26.points);
  const GridSummary g27 = lemma27_grid(12, 2);
  CHECK(g27.violations == 0);
  CHECK(g27.equality_mismatches == 0);
  CHECK(g27.applicable > 0);
  const GridSummary e = eq1_grid(5, 10, 3);
  CHECK(e.points == 15 * 10);
  CHECK(e.violations == 0);
  // Thread count does not change the summary.
  const GridSummary serial = lemma27_grid(12, 1);
  CHECK(serial.points == g27.points);
  CHECK(serial.applicable == g27.applicable);
}
