#include "crossunion/union_set.hpp"

#include <bit>
#include <stdexcept>

namespace crossunion {

namespace {

std::size_t word_count(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

// Positions whose index has bit b clear, for b < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// words[V] |= words[V \ {b}] for every V containing b.
void spread(std::vector<std::uint64_t>& words, int b) {
  if (b < 6) {
    const unsigned shift = 1U << b;
    for (auto& w : words) w |= (w & kLowHalf[b]) << shift;
    return;
  }
  const std::size_t stride = std::size_t{1} << (b - 6);
  for (std::size_t idx = 0; idx < words.size(); ++idx) {
    if (idx & stride) words[idx] |= words[idx ^ stride];
  }
}

}  // namespace

DownSet::DownSet(int n) : n_(n), full_(universe_mask(n)) {
  if (n < 1 || n > kMaxEnumerationUniverse) {
    throw std::invalid_argument("DownSet: n must be in [1, 24]");
  }
  words_.assign(word_count(n), 0);
  words_[0] = 1;
}

DownSet::DownSet(int n, std::vector<std::uint64_t> words)
    : n_(n), full_(universe_mask(n)), words_(std::move(words)) {}

DownSet DownSet::extend(std::span<const SetMask> members) const {
  std::vector<std::uint64_t> result(words_.size(), 0);
  std::vector<std::uint64_t> scratch;
  for (SetMask a : members) {
    scratch = words_;
    SetMask rest = a;
    while (rest != 0) {
      const int b = std::countr_zero(rest);
      rest &= rest - 1;
      spread(scratch, b);
    }
    for (std::size_t i = 0; i < result.size(); ++i) result[i] |= scratch[i];
  }
  return DownSet(n_, std::move(result));
}

}  // namespace crossunion
