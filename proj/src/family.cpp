#include "crossunion/family.hpp"

#include "crossunion/combinat.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace crossunion {

SetMask universe_mask(int n) {
  if (n < 0 || n > kMaxUniverse) throw std::invalid_argument("universe size must be in [0, 64]");
  return n == kMaxUniverse ? ~SetMask{0} : (SetMask{1} << n) - 1;
}

SetMask make_set(std::initializer_list<int> elements) {
  SetMask set = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxUniverse) throw std::invalid_argument("element out of range");
    set |= SetMask{1} << (e - 1);
  }
  return set;
}

std::vector<int> set_elements(SetMask set) {
  std::vector<int> out;
  while (set != 0) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return out;
}

int set_size(SetMask set) noexcept { return std::popcount(set); }

std::vector<SetMask> all_k_subsets(int n, int k) {
  if (n < 0 || n > kMaxUniverse || k < 0) throw std::invalid_argument("all_k_subsets: bad (n, k)");
  std::vector<SetMask> out;
  if (k > n) return out;
  if (k == 0) return {SetMask{0}};
  // Gosper's hack walks k-subsets in increasing numeric (= colex) order.
  SetMask set = (SetMask{1} << k) - 1;
  const SetMask last = set << (n - k);
  while (true) {
    out.push_back(set);
    if (set == last) break;
    const SetMask low = set & (~set + 1);
    const SetMask ripple = set + low;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
  return out;
}

Family::Family(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("Family: n must be in [1, 64]");
  if (k < 0 || k > n) throw std::invalid_argument("Family: k must be in [0, n]");
}

Family::Family(int n, int k, std::vector<SetMask> sets) : Family(n, k) {
  const SetMask full = universe_mask(n);
  for (SetMask s : sets) {
    if ((s & ~full) != 0) throw std::invalid_argument("Family: member outside [n]");
    if (std::popcount(s) != k) throw std::invalid_argument("Family: member has wrong size");
  }
  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
    throw std::invalid_argument("Family: repeated member");
  }
  sets_ = std::move(sets);
}

Family Family::complete(int n, int k) { return Family(n, k, all_k_subsets(n, k)); }

Family Family::star(int n, int k, int avoid) {
  if (avoid < 1 || avoid > n) throw std::invalid_argument("Family::star: element out of range");
  const SetMask bit = SetMask{1} << (avoid - 1);
  std::vector<SetMask> sets;
  for (SetMask s : all_k_subsets(n, k)) {
    if ((s & bit) == 0) sets.push_back(s);
  }
  return Family(n, k, std::move(sets));
}

bool Family::contains(SetMask set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set);
}

SetMask Family::support() const noexcept {
  return std::accumulate(sets_.begin(), sets_.end(), SetMask{0},
                         [](SetMask acc, SetMask s) { return acc | s; });
}

namespace {

void require_compatible(const Family& a, const Family& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw std::invalid_argument("families over different (n, k)");
  }
}

}  // namespace

Family family_intersection(const Family& a, const Family& b) {
  require_compatible(a, b);
  std::vector<SetMask> out;
  std::set_intersection(a.sets().begin(), a.sets().end(), b.sets().begin(), b.sets().end(),
                        std::back_inserter(out));
  return Family(a.n(), a.k(), std::move(out));
}

Family family_union(const Family& a, const Family& b) {
  require_compatible(a, b);
  std::vector<SetMask> out;
  std::set_union(a.sets().begin(), a.sets().end(), b.sets().begin(), b.sets().end(),
                 std::back_inserter(out));
  return Family(a.n(), a.k(), std::move(out));
}

bool is_subfamily(const Family& inner, const Family& outer) {
  require_compatible(inner, outer);
  return std::includes(outer.sets().begin(), outer.sets().end(), inner.sets().begin(),
                       inner.sets().end());
}

FamilyTuple::FamilyTuple(std::vector<Family> families) : families_(std::move(families)) {
  if (families_.size() < 2) throw std::invalid_argument("FamilyTuple: need at least two families");
  for (const Family& f : families_) {
    if (f.empty()) throw std::invalid_argument("FamilyTuple: families must be non-empty");
    require_compatible(f, families_.front());
  }
}

std::uint64_t FamilyTuple::total_size() const noexcept {
  std::uint64_t total = 0;
  for (const Family& f : families_) total += f.size();
  return total;
}

namespace {

// Dead-state memo for one level of the transversal search.
class StateMemo {
 public:
  explicit StateMemo(int n) : dense_(n <= kMaxEnumerationUniverse) {}

  bool contains(SetMask state) const {
    if (dense_) {
      if (bits_.empty()) return false;
      return (bits_[state >> 6] >> (state & 63)) & 1U;
    }
    return sparse_.contains(state);
  }

  void insert(SetMask state, int n) {
    if (dense_) {
      if (bits_.empty()) bits_.assign((std::size_t{1} << n) / 64 + 1, 0);
      bits_[state >> 6] |= std::uint64_t{1} << (state & 63);
    } else {
      sparse_.insert(state);
    }
  }

 private:
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<SetMask> sparse_;
};

class TransversalSearch {
 public:
  TransversalSearch(std::span<const Family> families, int limit)
      : families_(families), limit_(limit) {
    n_ = families.front().n();
    suffix_capacity_.assign(families.size() + 1, 0);
    for (std::size_t i = families.size(); i-- > 0;) {
      suffix_capacity_[i] = suffix_capacity_[i + 1] + families[i].k();
    }
    memo_.reserve(families.size());
    for (std::size_t i = 0; i < families.size(); ++i) memo_.emplace_back(n_);
    chosen_.resize(families.size());
  }

  std::optional<std::vector<SetMask>> run() {
    for (const Family& f : families_) {
      if (f.empty()) return std::nullopt;
    }
    if (visit(0, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool visit(std::size_t level, SetMask acc) {
    const int have = std::popcount(acc);
    if (level == families_.size()) return have > limit_;
    if (have + suffix_capacity_[level] <= limit_) return false;
    if (memo_[level].contains(acc)) return false;
    for (SetMask s : families_[level].sets()) {
      chosen_[level] = s;
      if (visit(level + 1, acc | s)) return true;
    }
    memo_[level].insert(acc, n_);
    return false;
  }

  std::span<const Family> families_;
  int limit_;
  int n_ = 0;
  std::vector<int> suffix_capacity_;
  std::vector<StateMemo> memo_;
  std::vector<SetMask> chosen_;
};

}  // namespace

std::optional<std::vector<SetMask>> transversal_exceeding(std::span<const Family> families,
                                                          int limit) {
  if (families.empty()) throw std::invalid_argument("transversal search over no families");
  const int n = families.front().n();
  for (const Family& f : families) {
    if (f.n() != n) throw std::invalid_argument("families over different universes");
  }
  return TransversalSearch(families, limit).run();
}

std::optional<std::vector<SetMask>> covering_transversal(std::span<const Family> families) {
  if (families.empty()) throw std::invalid_argument("transversal search over no families");
  return transversal_exceeding(families, families.front().n() - 1);
}

bool is_cross_union(std::span<const Family> families) {
  return !covering_transversal(families).has_value();
}

bool is_cross_union(const FamilyTuple& tuple) { return is_cross_union(tuple.families()); }

Family complement_dual(const Family& f) {
  const SetMask full = universe_mask(f.n());
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask s : f.sets()) out.push_back(full & ~s);
  return Family(f.n(), f.n() - f.k(), std::move(out));
}

bool is_r_wise_union(const Family& f, int r) {
  if (r < 1) throw std::invalid_argument("is_r_wise_union: r must be >= 1");
  std::vector<Family> copies(static_cast<std::size_t>(r), f);
  return is_cross_union(copies);
}

bool u_property(std::span<const Family> families, int q) {
  if (families.empty()) throw std::invalid_argument("u_property over no families");
  if (q < 0 || q > families.front().n()) throw std::invalid_argument("u_property: q out of range");
  return !transversal_exceeding(families, q).has_value();
}

bool u_property(const FamilyTuple& tuple, int q) { return u_property(tuple.families(), q); }

std::optional<int> star_signature(const Family& f) {
  const int n = f.n();
  const int k = f.k();
  if (k >= n || f.empty()) return std::nullopt;
  const SetMask missing = universe_mask(n) & ~f.support();
  if (std::popcount(missing) != 1) return std::nullopt;
  // f avoids exactly one element; it is that star iff it has the star's size.
  if (BigInt(f.size()) != binom(n - 1, k)) return std::nullopt;
  return std::countr_zero(missing) + 1;
}

std::string to_text(const Family& f) {
  std::string out = "n=" + std::to_string(f.n()) + " k=" + std::to_string(f.k()) + "\n";
  for (SetMask s : f.sets()) {
    bool first = true;
    for (int e : set_elements(s)) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

int parse_int(std::string_view text, std::size_t line_no) {
  int value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw FormatError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

Family parse_family(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError("missing header line");
  const std::string_view header = lines.front();
  const auto space = header.find(' ');
  if (header.substr(0, 2) != "n=" || space == std::string_view::npos ||
      header.substr(space + 1, 2) != "k=") {
    throw FormatError("header must read 'n=<n> k=<k>'");
  }
  const int n = parse_int(header.substr(2, space - 2), 1);
  const int k = parse_int(header.substr(space + 3), 1);
  if (n < 1 || n > kMaxUniverse || k < 0 || k > n) throw FormatError("header (n, k) out of range");

  std::vector<SetMask> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t line_no = i + 1;
    if (line.empty() && k > 0) {
      // Tolerate trailing blank lines only.
      for (std::size_t j = i; j < lines.size(); ++j) {
        if (!lines[j].empty()) throw FormatError("line " + std::to_string(line_no) + ": blank line");
      }
      break;
    }
    SetMask set = 0;
    int previous = 0;
    std::size_t start = 0;
    while (k > 0 && start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos) comma = line.size();
      const int e = parse_int(line.substr(start, comma - start), line_no);
      if (e < 1 || e > n) throw FormatError("line " + std::to_string(line_no) + ": element out of range");
      if (e <= previous) {
        throw FormatError("line " + std::to_string(line_no) + ": elements must increase");
      }
      previous = e;
      set |= SetMask{1} << (e - 1);
      start = comma + 1;
    }
    if (std::popcount(set) != k) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(k) +
                        " elements");
    }
    sets.push_back(set);
  }
  std::sort(sets.begin(), sets.end());
  if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
    throw FormatError("repeated member");
  }
  return Family(n, k, std::move(sets));
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

}  // namespace crossunion
