#include "oracles.hpp"

#include "hrd/census.hpp"
#include "hrd/gentree.hpp"
#include "hrd/lowerbound.hpp"

#include <doctest.h>

#include <set>

using hrd::Permutation;

TEST_CASE("safe sites") {
  const Permutation wheel{4, 1, 3, 5, 2};
  CHECK(hrd::safe_sites(wheel) == std::vector<int>{0, 3, 4, 5});
  CHECK(hrd::canonical_sites(wheel) == std::vector<int>{0, 3, 4});
  CHECK(hrd::safe_sites(Permutation{2, 1, 3}) == std::vector<int>{0, 2, 3});
  CHECK(hrd::safe_sites(Permutation{3, 1, 2}) == std::vector<int>{0, 1, 3});
  CHECK(hrd::insert_max(wheel, 0) == Permutation{6, 4, 1, 3, 5, 2});
  CHECK_THROWS_AS(hrd::insert_max(wheel, 1), std::invalid_argument);
}

TEST_CASE("insertion at safe sites keeps Baxter and HRD_5") {
  // Every HRD_5 permutation of length <= 6, every safe site.
  for (int n = 1; n <= 6; ++n)
    for (const auto &v : oracle::all_permutations(n)) {
      const Permutation p(v);
      if (!hrd::is_hrd(p, 5))
        continue;
      for (int site : hrd::safe_sites(p)) {
        const Permutation q = hrd::insert_max(p, site);
        REQUIRE(oracle::is_baxter(oracle::values_of(q)));
        REQUIRE(hrd::is_hrd(q, 5));
      }
    }
}

TEST_CASE("insertion families") {
  const auto small = hrd::insertion_family(5, 7, Permutation{4, 1, 3, 5, 2});
  CHECK(small.distinct == 9);
  CHECK(small.all_hrd_k);
  CHECK(small.none_hrd_below);
  CHECK(hrd::insertion_family(5, 8, Permutation{2, 5, 3, 1, 4}).distinct == 27);
  for (const Permutation &seed : {Permutation{4, 1, 3, 5, 2}, Permutation{2, 5, 3, 1, 4}})
    for (int n = 5; n <= 10; ++n) {
      const auto r = hrd::insertion_family(5, n, seed);
      REQUIRE(r.distinct == r.expected);
      REQUIRE(r.traces == r.distinct);
      REQUIRE(r.all_baxter);
      REQUIRE(r.all_hrd_k);
      REQUIRE(r.none_hrd_below);
      const auto all = hrd::insertion_family(5, n, seed, true);
      REQUIRE(all.distinct >= r.distinct);
      REQUIRE(all.all_baxter);
    }
  const auto seven = hrd::census_simple_baxter(7, true).permutations.front();
  const auto r = hrd::insertion_family(7, 10, seven);
  CHECK(r.distinct == 27);
  CHECK(r.none_hrd_below);
  CHECK(hrd::format_report(small) ==
        "seed=41352 k=5 n=7 family=9 expected=9 all_baxter=true all_hrd_k=true "
        "none_hrd_k-1=true");
  CHECK(small.samples.size() == 3);
  CHECK(small.samples.front().choices == std::vector<int>{0, 0});

  CHECK_THROWS_AS(hrd::insertion_family(5, 7, Permutation{1, 2, 3, 4, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hrd::insertion_family(5, 4, Permutation{4, 1, 3, 5, 2}),
                  std::invalid_argument);
}

TEST_CASE("growing irreducible floorplans") {
  for (int k : {7, 8}) {
    for (const Permutation &seed : hrd::census_simple_baxter(k, true).permutations) {
      auto f = hrd::bp2fp(seed);
      for (int step = 1; step <= 2; ++step) {
        f = hrd::grow_ihrd(f);
        REQUIRE(hrd::validate(f).ok());
        REQUIRE(f.size() == k + 2 * step);
        const Permutation label = hrd::fp2bp(f);
        REQUIRE(oracle::is_baxter(oracle::values_of(label)));
        REQUIRE(oracle::is_simple(oracle::values_of(label)));
      }
    }
  }
  CHECK_THROWS_AS(hrd::grow_ihrd(hrd::bp2fp(Permutation{4, 1, 3, 5, 2})), std::invalid_argument);
  CHECK_THROWS_AS(hrd::grow_ihrd(hrd::bp2fp(Permutation{1, 2, 3, 4, 5, 6, 7})),
                  std::invalid_argument);
}

TEST_CASE("cut and shift") {
  // Two side-by-side rooms: cutting the wall and shifting its lower half
  // gives two rooms on top of two, offset.
  const hrd::MosaicFloorplan f{2, 1, {{1, 0, 0, 1, 1}, {2, 1, 0, 2, 1}}};
  const auto g = hrd::cut_and_shift(f, {false, 1, 0, 1}, 0, 1);
  REQUIRE(g);
  CHECK(g->size() == 4);
  CHECK(hrd::validate(*g).ok());
  CHECK_FALSE(hrd::cut_and_shift(f, {false, 1, 0, 1}, 1, 1));
  CHECK_FALSE(hrd::cut_and_shift(f, {true, 1, 0, 1}, 0, 1));
}
