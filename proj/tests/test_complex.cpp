#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/pi_complex.hpp"

using namespace toric;

TEST_CASE("enumerate_pi examples") {
  auto fam = enumerate_pi(ValueSet{-2, 0, 3}, 5, 0);
  CHECK(fam.members == std::vector<Multiset>{Multiset{-2, -2, -2, 3, 3}, Multiset{0, 0, 0, 0, 0}});

  fam = enumerate_pi(ValueSet{0, 1, 3}, 3, 3);
  CHECK(fam.members == std::vector<Multiset>{Multiset{0, 0, 3}, Multiset{1, 1, 1}});

  CHECK(enumerate_pi(ValueSet{0, 1, 3}, 2, 5).members.empty());
  CHECK_THROWS_AS(enumerate_pi(ValueSet{0, 1, 3}, -1, 0), std::invalid_argument);
}

TEST_CASE("enumerate_pi matches the brute-force oracle") {
  ValueSet v{-2, 0, 3, 4};
  for (Int q = 0; q <= 5; ++q) {
    auto [lo, hi] = feasible_c_range(v, q);
    for (Int c = lo - 1; c <= hi + 1; ++c) {
      auto fam = enumerate_pi(v, q, c);
      auto expected = testutil::brute_force_members(v.elements(), q, c);
      REQUIRE(fam.members.size() == expected.size());
      // same multisets; the library fixes item-lexicographic order
      std::vector<std::vector<Int>> got;
      for (const auto& m : fam.members) got.push_back(m.items());
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == expected);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("components examples") {
  auto cs = components(ValueSet{-2, 0, 3}, 5, 0);
  CHECK(cs.component_count == 2);
  CHECK(cs.vertex_set == std::vector<Int>{-2, 0, 3});
  CHECK(cs.component_of[-2] == cs.component_of[3]);
  CHECK(cs.component_of[0] != cs.component_of[-2]);

  cs = components(ValueSet{0, 1, 3}, 4, 6);
  CHECK(cs.component_count == 1);
  CHECK(cs.vertex_set == std::vector<Int>{0, 1, 3});

  cs = components(ValueSet{0, 1, 3}, 2, 5);
  CHECK(cs.component_count == 0);
  CHECK(cs.vertex_set.empty());
}

TEST_CASE("is_connected examples") {
  CHECK_FALSE(is_connected(ValueSet{-2, 0, 3}, 5, 0));
  CHECK(is_connected(ValueSet{-2, 0, 3}, 6, 0));
  CHECK(is_connected(ValueSet{0, 1, 3}, 2, 5));  // empty family is vacuously connected
}

TEST_CASE("feasible_c_range") {
  CHECK(feasible_c_range(ValueSet{0, 1, 3}, 3) == std::pair<Int, Int>{0, 9});
  CHECK(feasible_c_range(ValueSet{-2, 0, 3}, 5) == std::pair<Int, Int>{-10, 15});
  CHECK(feasible_c_range(ValueSet{0, 1, 3}, 0) == std::pair<Int, Int>{0, 0});
}

TEST_CASE("complex properties on random inputs") {
  std::mt19937 rng(20240903);
  for (int trial = 0; trial < 40; ++trial) {
    ValueSet v = testutil::random_value_set(rng, 3, 6, -9, 9);
    std::uniform_int_distribution<Int> q_dist(1, 7);
    Int q = q_dist(rng);
    auto [lo, hi] = feasible_c_range(v, q);
    std::uniform_int_distribution<Int> c_dist(lo, hi);
    Int c = c_dist(rng);

    auto fam = enumerate_pi(v, q, c);
    // exhaustiveness against the independent counter
    CHECK(static_cast<Int>(fam.members.size()) == testutil::count_multisets(v.elements(), q, c));

    // reflection symmetry
    auto fam_r = enumerate_pi(v.reflect(), q, -c);
    REQUIRE(fam_r.members.size() == fam.members.size());
    std::vector<Multiset> negated;
    for (const auto& m : fam.members) negated.push_back(negate(m));
    std::sort(negated.begin(), negated.end());
    CHECK(negated == fam_r.members);
    CHECK(components(fam).component_count == components(fam_r).component_count);

    // affine equivariance
    Int g = 3, beta = -5;
    std::vector<Int> scaled;
    for (Int x : v.elements()) scaled.push_back(g * x + beta);
    ValueSet v2{std::move(scaled)};
    CHECK(components(v2, q, g * c + q * beta).component_count ==
          components(fam).component_count);
  }
}

TEST_CASE("connectivity above the bound on random inputs") {
  std::mt19937 rng(20240904);
  for (int trial = 0; trial < 15; ++trial) {
    ValueSet v = testutil::random_value_set(rng, 3, 5, -8, 8);
    auto gp = gap_profile(v);
    for (Int q = gp.r + gp.s + 1; q <= gp.r + gp.s + 3; ++q) {
      auto [lo, hi] = feasible_c_range(v, q);
      for (Int c = lo; c <= hi; ++c) CHECK(is_connected(v, q, c));
    }
  }
}
