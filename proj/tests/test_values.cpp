#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/value_set.hpp"

using namespace toric;

TEST_CASE("value set validation") {
  CHECK(ValueSet({0, 1, 3}).elements() == std::vector<Int>{0, 1, 3});
  CHECK_THROWS_AS(ValueSet({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ValueSet({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ValueSet(std::vector<Int>{7}), std::invalid_argument);
}

TEST_CASE("gap profile") {
  auto gp = gap_profile(ValueSet{-2, 0, 3});
  CHECK(gp.gaps == std::vector<Int>{2, 3});
  CHECK(gp.r == 3);
  CHECK(gp.s == 2);

  gp = gap_profile(ValueSet{0, 1, 2, 3});
  CHECK(gp.gaps == std::vector<Int>{1, 1, 1});
  CHECK(gp.r == 1);
  CHECK(gp.s == 1);

  gp = gap_profile(ValueSet{0, 1, 3});
  CHECK(gp.r == 2);
  CHECK(gp.s == 1);

  CHECK_THROWS_AS(gap_profile(ValueSet{0, 5}), std::invalid_argument);
}

TEST_CASE("neighbor queries") {
  ValueSet v{0, 1, 3};
  CHECK(v.next_above(1) == 3);
  CHECK(v.next_above(3) == std::nullopt);
  CHECK(v.next_below(1) == 0);
  CHECK(v.next_below(0) == std::nullopt);
  CHECK(ValueSet{-2, 0, 3}.next_above(-2) == 0);
  CHECK(ValueSet{-2, 0, 3}.next_below(3) == 0);
  CHECK_THROWS_AS(v.next_above(2), std::invalid_argument);
  CHECK_THROWS_AS(v.next_below(2), std::invalid_argument);
}

TEST_CASE("reflect") {
  CHECK(ValueSet{0, 1, 3}.reflect() == ValueSet{-3, -1, 0});
  CHECK(ValueSet{-2, 0, 3}.reflect() == ValueSet{-3, 0, 2});
  ValueSet v{-5, 2, 9, 11};
  CHECK(v.reflect().reflect() == v);
}

TEST_CASE("normalize") {
  auto n = normalize(ValueSet{0, 2, 6});
  CHECK(n.values == ValueSet{0, 1, 3});
  CHECK(n.scale == 2);
  CHECK(n.offset == 0);

  n = normalize(ValueSet{5, 6, 8});
  CHECK(n.values == ValueSet{0, 1, 3});
  CHECK(n.scale == 1);
  CHECK(n.offset == 5);

  n = normalize(ValueSet{-2, 0, 3});
  CHECK(n.values == ValueSet{0, 2, 5});
  CHECK(n.scale == 1);
  CHECK(n.offset == -2);
}

TEST_CASE("value set properties on random inputs") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    ValueSet v = testutil::random_value_set(rng, 3, 8, -40, 40);

    // reflection preserves the gap multiset and (r, s)
    auto gp = gap_profile(v);
    auto gp_r = gap_profile(v.reflect());
    auto sorted = gp.gaps;
    auto sorted_r = gp_r.gaps;
    std::sort(sorted.begin(), sorted.end());
    std::sort(sorted_r.begin(), sorted_r.end());
    CHECK(sorted == sorted_r);
    CHECK(gp.r == gp_r.r);
    CHECK(gp.s == gp_r.s);

    // neighbors invert on interior elements
    for (Int x : v.elements())
      if (x != v.max()) CHECK(v.next_below(*v.next_above(x)) == x);

    // normalize is idempotent and reconstructs the input
    auto n = normalize(v);
    auto n2 = normalize(n.values);
    CHECK(n2.scale == 1);
    CHECK(n2.offset == 0);
    CHECK(n2.values == n.values);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(v.elements()[i] == n.scale * n.values.elements()[i] + n.offset);

    // normalized r+s never exceeds the raw one
    auto gp_n = gap_profile(n.values);
    CHECK(gp_n.r + gp_n.s <= gp.r + gp.s);
  }
}
