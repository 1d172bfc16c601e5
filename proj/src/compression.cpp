#include "crossunion/compression.hpp"

#include <bit>
#include <stdexcept>

namespace crossunion {

Family shift_ij(const Family& f, int i, int j) {
  if (i < 1 || j <= i || j > f.n()) throw std::invalid_argument("shift_ij: need 1 <= i < j <= n");
  const SetMask bi = SetMask{1} << (i - 1);
  const SetMask bj = SetMask{1} << (j - 1);
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask s : f.sets()) {
    if ((s & bj) != 0 && (s & bi) == 0) {
      const SetMask moved = (s & ~bj) | bi;
      out.push_back(f.contains(moved) ? s : moved);
    } else {
      out.push_back(s);
    }
  }
  return Family(f.n(), f.k(), std::move(out));
}

std::pair<std::vector<Family>, ShiftTrace> joint_shift_fixpoint(std::span<const Family> families) {
  std::vector<Family> current(families.begin(), families.end());
  ShiftTrace trace;
  if (current.empty()) return {current, trace};
  const int n = current.front().n();
  bool changed = true;
  while (changed) {
    changed = false;
    ++trace.rounds;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        bool moved = false;
        for (Family& f : current) {
          Family shifted = shift_ij(f, i, j);
          if (shifted != f) {
            f = std::move(shifted);
            moved = true;
          }
        }
        if (moved) {
          trace.applied.emplace_back(i, j);
          changed = true;
        }
      }
    }
  }
  return {current, trace};
}

std::pair<Family, ShiftTrace> shift_fixpoint(const Family& f) {
  auto [out, trace] = joint_shift_fixpoint(std::span<const Family>(&f, 1));
  return {std::move(out.front()), std::move(trace)};
}

std::vector<Family> replay(std::span<const Family> families, const ShiftTrace& trace) {
  std::vector<Family> current(families.begin(), families.end());
  for (const auto& [i, j] : trace.applied) {
    for (Family& f : current) f = shift_ij(f, i, j);
  }
  return current;
}

Family replay(const Family& f, const ShiftTrace& trace) {
  return replay(std::span<const Family>(&f, 1), trace).front();
}

bool is_shifted(const Family& f) {
  for (SetMask s : f.sets()) {
    // Elementary down-steps x -> x-1 generate the domination order.
    SetMask rest = s & ~SetMask{1};
    while (rest != 0) {
      const SetMask bit = rest & (~rest + 1);
      rest &= rest - 1;
      const SetMask lower = bit >> 1;
      if ((s & lower) == 0 && !f.contains((s & ~bit) | lower)) return false;
    }
  }
  return true;
}

std::uint64_t element_weight(const Family& f) {
  std::uint64_t total = 0;
  for (SetMask s : f.sets()) {
    for (int e : set_elements(s)) total += static_cast<std::uint64_t>(e);
  }
  return total;
}

bool is_nested(std::span<const Family> families) {
  for (std::size_t i = 1; i < families.size(); ++i) {
    if (!is_subfamily(families[i - 1], families[i])) return false;
  }
  return true;
}

FamilyTuple nest_normalize(const FamilyTuple& tuple) {
  if (!is_cross_union(tuple)) throw std::invalid_argument("nest_normalize: input is not cross-union");
  auto [current, trace] = joint_shift_fixpoint(tuple.families());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < current.size(); ++u) {
      for (std::size_t v = u + 1; v < current.size(); ++v) {
        Family meet = family_intersection(current[u], current[v]);
        Family join = family_union(current[u], current[v]);
        if (meet != current[u] || join != current[v]) {
          current[u] = std::move(meet);
          current[v] = std::move(join);
          changed = true;
        }
      }
    }
  }
  return FamilyTuple(std::move(current));
}

}  // namespace crossunion
