#include "oracles.hpp"

#include "hrd/census.hpp"
#include "hrd/gentree.hpp"

#include <doctest.h>

#include <set>

using hrd::GenTree;
using hrd::Permutation;

TEST_CASE("tree text format") {
  const GenTree t = hrd::parse_tree("(41352 (12 . .) . . . .)");
  CHECK(t.label == Permutation{4, 1, 3, 5, 2});
  CHECK(t.leaf_count() == 6);
  CHECK(hrd::format_tree(t) == "(41352 (12 . .) . . . .)");
  CHECK(hrd::perm_of_tree(t) == Permutation{4, 5, 1, 3, 6, 2});
  CHECK(hrd::format_tree(GenTree::leaf()) == ".");
  CHECK_THROWS_AS(hrd::parse_tree("(12 . ."), hrd::ParseError);
  CHECK_THROWS_AS(hrd::parse_tree("(12 . . .)"), hrd::ParseError);
  CHECK_THROWS_AS(hrd::parse_tree("(2413 . . . .)"), hrd::ParseError);
  // skew rule: 12 under the first slot of 12 is not canonical
  CHECK_THROWS_AS(hrd::parse_tree("(12 (12 . .) .)"), hrd::ParseError);
  GenTree unskewed;
  unskewed.label = Permutation{1, 2};
  unskewed.children = {hrd::parse_tree("(12 . .)"), GenTree::leaf()};
  CHECK_THROWS_AS(hrd::check_tree(unskewed), std::invalid_argument);
  CHECK_NOTHROW(hrd::check_tree(hrd::parse_tree("(12 . (12 . .))")));
  CHECK_THROWS_AS(hrd::check_tree(t, 4), std::invalid_argument);
}

TEST_CASE("canonical trees") {
  const auto t = hrd::tree_of_perm(Permutation{1, 2, 3}, 2);
  REQUIRE(t);
  CHECK(hrd::format_tree(*t) == "(12 . (12 . .))");
  CHECK_FALSE(hrd::tree_of_perm(Permutation{4, 1, 3, 5, 2}, 4));
  CHECK(hrd::tree_of_perm(Permutation{4, 1, 3, 5, 2}, 5));
  CHECK_THROWS_AS(hrd::tree_of_perm(Permutation{2, 4, 1, 3}, 5), std::invalid_argument);
  CHECK_THROWS_AS(hrd::tree_of_perm(Permutation{1}, 1), std::invalid_argument);
  CHECK(hrd::hrd_order(Permutation{1}) == 1);
  CHECK(hrd::hrd_order(Permutation{2, 4, 1, 3}) == std::nullopt);
}

TEST_CASE("HRD_k membership agrees with the hierarchy oracle") {
  for (int k = 2; k <= 7; ++k) {
    oracle::Hierarchy h(k);
    for (int n = 1; n <= 7; ++n)
      for (const auto &v : oracle::all_permutations(n))
        REQUIRE(hrd::is_hrd(Permutation(v), k) == h.contains(v));
  }
}

TEST_CASE("trees and permutations correspond one to one") {
  for (int k = 2; k <= 7; ++k)
    for (int n = 1; n <= 7; ++n) {
      std::set<Permutation> images;
      for (const GenTree &t : hrd::enumerate_trees(k, n)) {
        REQUIRE_NOTHROW(hrd::check_tree(t, k));
        REQUIRE(t.leaf_count() == n);
        const Permutation p = hrd::perm_of_tree(t);
        REQUIRE(images.insert(p).second);
        REQUIRE(hrd::tree_of_perm(p, k) == t);
        REQUIRE(hrd::parse_tree(hrd::format_tree(t)) == t);
      }
      int members = 0;
      for (const auto &v : oracle::all_permutations(n))
        members += hrd::is_hrd(Permutation(v), k);
      REQUIRE(static_cast<int>(images.size()) == members);
    }
}

TEST_CASE("floorplans of trees") {
  for (int k : {2, 5, 7})
    for (int n = 1; n <= 7; ++n)
      for (const GenTree &t : hrd::enumerate_trees(k, n)) {
        const auto f = hrd::floorplan_of_tree(t);
        REQUIRE(hrd::validate(f).ok());
        REQUIRE(hrd::fp2bp(f) == hrd::perm_of_tree(t));
      }
  const GenTree labelled = hrd::attach_leaf_labels(hrd::parse_tree("(21 (12 . .) .)"));
  CHECK(labelled.children[0].children[0].room == 2);
  CHECK(labelled.children[0].children[1].room == 3);
  CHECK(labelled.children[1].room == 1);
}

TEST_CASE("irreducible permutations") {
  CHECK(hrd::is_ihrd(Permutation{4, 1, 3, 5, 2}));
  CHECK(hrd::is_ihrd(Permutation{1, 2}));
  CHECK_FALSE(hrd::is_ihrd(Permutation{1}));
  CHECK_FALSE(hrd::is_ihrd(Permutation{2, 4, 1, 3}));
  for (int n = 2; n <= 8; ++n)
    for (const auto &p : hrd::census_simple_baxter(n, true).permutations) {
      REQUIRE(hrd::is_hrd(p, n));
      REQUIRE((n == 2 || !hrd::is_hrd(p, n - 1)));
    }
}

TEST_CASE("census") {
  CHECK(hrd::census_simple_baxter(2).count == 2);
  CHECK(hrd::census_simple_baxter(3).count == 0);
  CHECK(hrd::census_simple_baxter(4).count == 0);
  const auto five = hrd::census_simple_baxter(5, true);
  CHECK(five.count == 2);
  CHECK(five.permutations ==
        std::vector<Permutation>{Permutation{2, 5, 3, 1, 4}, Permutation{4, 1, 3, 5, 2}});
  for (int n = 2; n <= 8; ++n) {
    std::uint64_t brute = 0;
    for (const auto &v : oracle::all_permutations(n))
      brute += oracle::is_simple(v) && oracle::is_baxter(v);
    REQUIRE(hrd::census_simple_baxter(n).count == brute);
  }
  CHECK_THROWS_AS(hrd::census_simple_baxter(1), std::invalid_argument);
  CHECK_THROWS_AS(hrd::census_simple_baxter(hrd::kCensusCap + 1), hrd::CapExceeded);
  CHECK_THROWS_AS(hrd::census_simple_baxter(hrd::kCensusOverrideCap + 1, false, true),
                  hrd::CapExceeded);
  CHECK(hrd::skeleton_count(1) == 0);
}
