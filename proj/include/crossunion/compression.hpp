#pragma once

#include <span>
#include <utility>
#include <vector>

#include "crossunion/family.hpp"

namespace crossunion {

/// Effective (i, j) shifts in application order, and the number of full sweeps.
struct ShiftTrace {
  std::vector<std::pair<int, int>> applied;
  int rounds = 0;

  friend bool operator==(const ShiftTrace&, const ShiftTrace&) = default;
};

/// The compression S_ij, 1 <= i < j <= n: each member containing j but not i
/// becomes (F \ {j}) u {i}, unless that set is already a member.
Family shift_ij(const Family& f, int i, int j);

/// Sweeps all pairs i < j in lexicographic order until nothing moves.
std::pair<Family, ShiftTrace> shift_fixpoint(const Family& f);

/// Applies each S_ij to every family at once; the output families are all shifted.
std::pair<std::vector<Family>, ShiftTrace> joint_shift_fixpoint(std::span<const Family> families);

Family replay(const Family& f, const ShiftTrace& trace);
std::vector<Family> replay(std::span<const Family> families, const ShiftTrace& trace);

/// Closed under coordinatewise domination.
bool is_shifted(const Family& f);

/// Sum over members of the sum of their elements. Strictly drops at each effective shift.
std::uint64_t element_weight(const Family& f);

bool is_nested(std::span<const Family> families);

/// Joint shifting followed by (F_u, F_v) -> (F_u n F_v, F_u u F_v) over pairs u < v
/// in lexicographic order, repeated until stable. Output is nested, shifted,
/// cross-union and keeps the total size. Throws std::invalid_argument if the
/// input is not cross-union.
FamilyTuple nest_normalize(const FamilyTuple& tuple);

}  // namespace crossunion
