#include "crossunion/combinat.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace crossunion {

BigInt binom(long long a, long long b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("binom: negative argument (" + std::to_string(a) + ", " +
                                std::to_string(b) + ")");
  }
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a-b+i, i) here
  }
  return result;
}

std::uint64_t binom_u64(long long a, long long b) {
  const BigInt value = binom(a, b);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("binom_u64: C(" + std::to_string(a) + ", " + std::to_string(b) +
                              ") exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

BinomTable::BinomTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("BinomTable: negative n_max");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int a = 0; a <= n_max; ++a) {
    auto& row = rows_[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(a) + 1);
    row.front() = 1;
    row.back() = 1;
    for (int b = 1; b < a; ++b) {
      const auto& prev = rows_[static_cast<std::size_t>(a) - 1];
      row[static_cast<std::size_t>(b)] =
          prev[static_cast<std::size_t>(b) - 1] + prev[static_cast<std::size_t>(b)];
    }
  }
}

const BigInt& BinomTable::operator()(int a, int b) const {
  if (a < 0 || b < 0) throw std::invalid_argument("BinomTable: negative argument");
  if (a > n_max_) throw std::out_of_range("BinomTable: a exceeds n_max");
  if (b > a) return zero_;
  return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

double binom_real(double x, int k) {
  if (k < 0) throw std::invalid_argument("binom_real: negative k");
  double value = 1.0;
  for (int i = 0; i < k; ++i) value *= (x - i) / (i + 1);
  return value;
}

BigRational binom_rational(const BigRational& x, int k) {
  if (k < 0) throw std::invalid_argument("binom_rational: negative k");
  BigRational value = 1;
  for (int i = 0; i < k; ++i) {
    value *= x - i;
    value /= i + 1;
  }
  return value;
}

namespace {

constexpr int kBisectionSteps = 200;

}  // namespace

double solve_binom_x_below(std::uint64_t m, int k, double upper) {
  if (k < 1) throw std::invalid_argument("solve_binom_x: k must be >= 1");
  if (m < 1) throw std::invalid_argument("solve_binom_x: m must be >= 1");
  const double target = static_cast<double>(m);
  double lo = k;
  double hi = upper;
  if (binom_real(hi, k) < target * (1.0 - 1e-15)) {
    throw std::out_of_range("solve_binom_x: m exceeds C(upper, k)");
  }
  if (m == 1) return lo;
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (binom_real(mid, k) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double solve_binom_x(std::uint64_t m, int k, int n) {
  if (k < 1 || n - 1 < k) throw std::invalid_argument("solve_binom_x: need 1 <= k <= n-1");
  if (m < 1 || BigInt(m) > binom(n - 1, k)) {
    throw std::out_of_range("solve_binom_x: m must lie in [1, C(n-1, k)]");
  }
  return solve_binom_x_below(m, k, static_cast<double>(n - 1));
}

}  // namespace crossunion
