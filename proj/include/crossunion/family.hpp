#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossunion {

/// A subset of [n] as a bit mask; element i (1-based) is bit i-1.
using SetMask = std::uint64_t;

inline constexpr int kMaxUniverse = 64;
/// Operations that allocate per-mask state (2^n entries) refuse larger universes.
inline constexpr int kMaxEnumerationUniverse = 24;

SetMask universe_mask(int n);
SetMask make_set(std::initializer_list<int> elements);
std::vector<int> set_elements(SetMask set);
int set_size(SetMask set) noexcept;

/// All k-subsets of [n] in colexicographic order (numeric order of masks).
std::vector<SetMask> all_k_subsets(int n, int k);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A k-uniform family over [n]; members kept colex-sorted and distinct.
class Family {
 public:
  Family(int n, int k);
  /// Sorts the input; throws std::invalid_argument on wrong sizes, out-of-universe
  /// elements or repeated members.
  Family(int n, int k, std::vector<SetMask> sets);

  static Family complete(int n, int k);
  /// C([n] \ {avoid}, k).
  static Family star(int n, int k, int avoid);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  std::span<const SetMask> sets() const noexcept { return sets_; }
  bool contains(SetMask set) const;

  /// Union of all members.
  SetMask support() const noexcept;

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family& a, const Family& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.sets_ <=> b.sets_;
  }

 private:
  int n_;
  int k_;
  std::vector<SetMask> sets_;
};

Family family_intersection(const Family& a, const Family& b);
Family family_union(const Family& a, const Family& b);
bool is_subfamily(const Family& inner, const Family& outer);

/// (F_0, ..., F_s) with s >= 1, every family non-empty, common n and k.
class FamilyTuple {
 public:
  explicit FamilyTuple(std::vector<Family> families);

  int n() const noexcept { return families_.front().n(); }
  int k() const noexcept { return families_.front().k(); }
  int s() const noexcept { return static_cast<int>(families_.size()) - 1; }
  std::size_t size() const noexcept { return families_.size(); }
  std::span<const Family> families() const noexcept { return families_; }
  const Family& operator[](std::size_t i) const { return families_.at(i); }
  std::uint64_t total_size() const noexcept;

  friend bool operator==(const FamilyTuple&, const FamilyTuple&) = default;
  friend auto operator<=>(const FamilyTuple& a, const FamilyTuple& b) {
    return a.families_ <=> b.families_;
  }

 private:
  std::vector<Family> families_;
};

/// One member from each family whose union has more than `limit` elements, if any.
/// Families may differ in uniformity but must share n. Exact; memoizes dead
/// (index, accumulated union) states.
std::optional<std::vector<SetMask>> transversal_exceeding(std::span<const Family> families,
                                                          int limit);

/// A transversal whose union is [n], if one exists.
std::optional<std::vector<SetMask>> covering_transversal(std::span<const Family> families);

bool is_cross_union(std::span<const Family> families);
bool is_cross_union(const FamilyTuple& tuple);

/// {[n] \ F : F in f}.
Family complement_dual(const Family& f);

/// No r members (repetition allowed) cover [n].
bool is_r_wise_union(const Family& f, int r);

/// Every transversal union has at most q elements.
bool u_property(std::span<const Family> families, int q);
bool u_property(const FamilyTuple& tuple, int q);

/// i (1-based) when f = C([n] \ {i}, k).
std::optional<int> star_signature(const Family& f);

/// Text format: "n=<n> k=<k>" then one member per line, 1-based elements
/// comma-separated in increasing order. Members are written in colex order.
std::string to_text(const Family& f);
Family parse_family(std::string_view text);
Family read_family_file(const std::filesystem::path& path);

}  // namespace crossunion
