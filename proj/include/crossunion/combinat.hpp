#pragma once

#include <cstdint>
#include <vector>

#include "crossunion/bigint.hpp"

namespace crossunion {

/// Exact C(a, b); zero when b > a. Negative arguments throw std::invalid_argument.
BigInt binom(long long a, long long b);

/// C(a, b) as a 64-bit value; throws std::overflow_error if it does not fit.
std::uint64_t binom_u64(long long a, long long b);

/// Pascal's triangle up to n_max, exact. Immutable once built.
class BinomTable {
 public:
  explicit BinomTable(int n_max);

  int n_max() const noexcept { return n_max_; }

  /// C(a, b) for 0 <= a <= n_max; zero when b > a.
  const BigInt& operator()(int a, int b) const;

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_{0};
};

/// x(x-1)...(x-k+1)/k! for real x.
double binom_real(double x, int k);

/// The same falling-factorial quotient evaluated exactly at a rational point.
BigRational binom_rational(const BigRational& x, int k);

/// The unique x in [k, n-1] with C(x, k) = m, for 1 <= m <= C(n-1, k).
/// Bisection with a fixed iteration count, so the result is deterministic.
double solve_binom_x(std::uint64_t m, int k, int n);

/// Same as solve_binom_x but on [k, upper]; requires C(upper, k) >= m.
double solve_binom_x_below(std::uint64_t m, int k, double upper);

}  // namespace crossunion
