#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "crossunion/family.hpp"
#include "oracles.hpp"

using namespace crossunion;

namespace {

Family fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SetMask> masks;
  for (auto s : sets) masks.push_back(make_set(s));
  return Family(n, k, masks);
}

}  // namespace

TEST_CASE("set helpers") {
  CHECK(make_set({1, 3}) == 0b101);
  CHECK(set_elements(make_set({2, 5, 7})) == std::vector<int>{2, 5, 7});
  CHECK(set_size(make_set({1, 2, 9})) == 3);
  CHECK(universe_mask(64) == ~SetMask{0});
  CHECK(universe_mask(3) == 0b111);
  const auto colex = all_k_subsets(4, 2);
  CHECK(colex == std::vector<SetMask>{make_set({1, 2}), make_set({1, 3}), make_set({2, 3}),
                                      make_set({1, 4}), make_set({2, 4}), make_set({3, 4})});
  CHECK(all_k_subsets(6, 3).size() == 20);
  CHECK(all_k_subsets(5, 0) == std::vector<SetMask>{0});
}

TEST_CASE("family construction validates") {
  const Family f = fam(4, 2, {{3, 4}, {1, 2}});
  CHECK(f.size() == 2);
  CHECK(f.sets().front() == make_set({1, 2}));
  CHECK(f.contains(make_set({3, 4})));
  CHECK_FALSE(f.contains(make_set({1, 3})));
  CHECK(f.support() == universe_mask(4));
  CHECK_THROWS_AS(fam(4, 2, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(fam(4, 2, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(fam(3, 2, {{1, 4}}), std::invalid_argument);
  CHECK(Family::complete(6, 3).size() == 20);
  CHECK(Family::star(6, 3, 2).size() == 10);
  CHECK(star_signature(Family::star(6, 3, 2)) == 2);
  CHECK_FALSE(star_signature(Family::complete(6, 3)).has_value());
  CHECK_FALSE(star_signature(fam(4, 2, {{1, 2}, {1, 3}})).has_value());
}

TEST_CASE("family set operations") {
  const Family a = fam(4, 2, {{1, 2}, {1, 3}});
  const Family b = fam(4, 2, {{1, 3}, {2, 4}});
  CHECK(family_intersection(a, b) == fam(4, 2, {{1, 3}}));
  CHECK(family_union(a, b) == fam(4, 2, {{1, 2}, {1, 3}, {2, 4}}));
  CHECK(is_subfamily(fam(4, 2, {{1, 3}}), a));
  CHECK_FALSE(is_subfamily(b, a));
  CHECK(complement_dual(a) == fam(4, 2, {{3, 4}, {2, 4}}));
}

TEST_CASE("tuples need common parameters") {
  CHECK_THROWS_AS(FamilyTuple({Family::complete(4, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(FamilyTuple({Family::complete(4, 2), Family::complete(4, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(FamilyTuple({Family::complete(4, 2), Family(4, 2)}), std::invalid_argument);
  const FamilyTuple t({Family::star(4, 2, 1), Family::star(4, 2, 1)});
  CHECK(t.s() == 1);
  CHECK(t.total_size() == 6);
}

TEST_CASE("cross-union examples") {
  // n=3, k=1: {1},{2} in every family.
  const Family f = fam(3, 1, {{1}, {2}});
  CHECK(is_cross_union(FamilyTuple({f, f, f})));
  CHECK_FALSE(is_cross_union(FamilyTuple({Family::complete(3, 1), Family::complete(3, 1),
                                          Family::complete(3, 1)})));
  const FamilyTuple covering({Family::complete(4, 2), Family::complete(4, 2)});
  const auto w = covering_transversal(covering.families());
  REQUIRE(w.has_value());
  CHECK(((*w)[0] | (*w)[1]) == universe_mask(4));
  CHECK(u_property(FamilyTuple({f, f, f}), 2));
  CHECK_FALSE(u_property(FamilyTuple({f, f, f}), 1));
  CHECK_FALSE(is_r_wise_union(Family::complete(4, 2), 2));
  CHECK(is_r_wise_union(Family::star(5, 2, 5), 3));
  CHECK_FALSE(is_r_wise_union(fam(3, 1, {{1}, {2}, {3}}), 3));
  CHECK(is_r_wise_union(fam(3, 1, {{1}, {2}, {3}}), 2));
}

TEST_CASE("cross-union checker agrees with brute force") {
  Rng rng(7);
  int disagreements = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const int count = 2 + static_cast<int>(rng.below(3));
    std::vector<Family> fams;
    for (int i = 0; i < count; ++i) {
      const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      fams.push_back(oracle::random_family(rng, n, k, 0.3));
    }
    const bool expected = oracle::cross_union(oracle::members(fams), n);
    if (is_cross_union(fams) != expected) ++disagreements;
    for (int q = 0; q <= n; ++q) {
      bool brute = true;
      std::vector<std::size_t> idx(fams.size(), 0);
      std::function<void(std::size_t, SetMask)> walk = [&](std::size_t i, SetMask acc) {
        if (i == fams.size()) {
          if (std::popcount(acc) > q) brute = false;
          return;
        }
        for (SetMask a : fams[i].sets()) walk(i + 1, acc | a);
      };
      walk(0, 0);
      if (u_property(fams, q) != brute) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("text format round trip and strict parsing") {
  const Family f = fam(5, 2, {{1, 5}, {2, 3}});
  const std::string text = to_text(f);
  CHECK(text == "n=5 k=2\n2,3\n1,5\n");
  CHECK(parse_family(text) == f);
  CHECK(parse_family("n=5 k=2\r\n2,3\r\n1,5\r\n\r\n") == f);
  CHECK_THROWS_AS(parse_family("n=5 k=2\n3,2\n"), FormatError);
  CHECK_THROWS_AS(parse_family("n=5 k=2\n2,3\n2,3\n"), FormatError);
  CHECK_THROWS_AS(parse_family("n=5 k=2\n2,6\n"), FormatError);
  CHECK_THROWS_AS(parse_family("n=5 k=2\n2\n"), FormatError);
  CHECK_THROWS_AS(parse_family("n=5\n1,2\n"), FormatError);
  CHECK_THROWS_AS(parse_family("n=5 k=2\n1,x\n"), FormatError);
  CHECK(parse_family("n=3 k=0\n\n").size() == 1);

  const auto path = std::filesystem::temp_directory_path() / "crossunion_family_test.txt";
  std::ofstream(path) << text;
  CHECK(read_family_file(path) == f);
  std::filesystem::remove(path);
  CHECK_THROWS(read_family_file(path));
}
