#include "crossunion/shadow.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "crossunion/combinat.hpp"

namespace crossunion {

namespace {

void drop_one(const std::vector<SetMask>& from, std::vector<SetMask>& to) {
  std::unordered_set<SetMask> seen;
  seen.reserve(from.size() * 4);
  for (SetMask s : from) {
    SetMask rest = s;
    while (rest != 0) {
      const SetMask bit = rest & (~rest + 1);
      rest &= rest - 1;
      seen.insert(s & ~bit);
    }
  }
  to.assign(seen.begin(), seen.end());
}

}  // namespace

Family shadow(const Family& f, int level) {
  if (level < 1 || level > f.k()) throw std::invalid_argument("shadow: level must be in [1, k]");
  std::vector<SetMask> current(f.sets().begin(), f.sets().end());
  std::vector<SetMask> next;
  for (int size = f.k(); size > level; --size) {
    drop_one(current, next);
    current.swap(next);
  }
  return Family(f.n(), level, std::move(current));
}

ShadowReport lovasz_check(const Family& f, int level) {
  if (f.empty()) throw std::invalid_argument("lovasz_check: family must be non-empty");
  ShadowReport report;
  report.level = level;
  report.family_size = f.size();
  report.shadow_size = shadow(f, level).size();
  report.lovasz_x = solve_binom_x_below(f.size(), f.k(), static_cast<double>(f.n()));
  report.lovasz_bound = binom_real(report.lovasz_x, level);
  const double required = std::ceil(report.lovasz_bound - kLovaszSlack);
  report.holds = static_cast<double>(report.shadow_size) >= required;
  return report;
}

}  // namespace crossunion
