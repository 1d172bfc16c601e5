#pragma once

#include <cstdint>

#include "crossunion/family.hpp"

namespace crossunion {

/// Comparison of an exact shadow size against the Lovasz form of Kruskal-Katona:
/// |f| = C(x, k) implies |shadow_level(f)| >= C(x, level).
struct ShadowReport {
  int level = 0;
  std::uint64_t family_size = 0;
  std::uint64_t shadow_size = 0;
  double lovasz_x = 0.0;
  double lovasz_bound = 0.0;
  bool holds = false;
};

/// Slack subtracted from the real-valued bound before rounding up.
inline constexpr double kLovaszSlack = 1e-9;

/// All level-subsets of members of f, 1 <= level <= k.
Family shadow(const Family& f, int level);

/// x is solved on [k, n], since an arbitrary family may exceed C(n-1, k).
ShadowReport lovasz_check(const Family& f, int level);

}  // namespace crossunion
