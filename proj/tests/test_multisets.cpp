#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/multiset.hpp"

using namespace toric;

TEST_CASE("bidegree") {
  CHECK(bidegree(Multiset{-2, -2, -2, 3, 3}) == Bidegree{5, 0});
  CHECK(bidegree(Multiset{}) == Bidegree{0, 0});
  CHECK(bidegree(Multiset{0, 3}) == Bidegree{2, 3});
}

TEST_CASE("spread statistics") {
  CHECK(spread_m(Multiset{1, 2, 2}) == 11);
  CHECK(spread_m(Multiset{1, 1, 1, 1}) == 10);
  CHECK(spread_m(Multiset{0, 0, 1, 3}) == 15);

  CHECK(spread_m_tilde(Multiset{0, 0, 1, 3}) == 5);
  CHECK(spread_m_tilde(Multiset{1, 1, 1}) == 6);
  CHECK(spread_m_tilde(Multiset{}) == 0);
}

TEST_CASE("multiset arithmetic") {
  CHECK(add(Multiset{0, 1}, Multiset{1, 3}) == Multiset{0, 1, 1, 3});
  CHECK(subtract(Multiset{0, 1, 1, 3}, Multiset{1}) == Multiset{0, 1, 3});
  CHECK_THROWS_AS(subtract(Multiset{0, 1}, Multiset{2}), std::invalid_argument);
  CHECK_THROWS_AS(subtract(Multiset{0, 1}, Multiset{1, 1}), std::invalid_argument);
  CHECK(support(Multiset{-2, -2, -2, 3, 3}) == std::vector<Int>{-2, 3});
  CHECK(intersects(Multiset{0, 1}, Multiset{1, 3}));
  CHECK_FALSE(intersects(Multiset{0, 2}, Multiset{1, 3}));
  CHECK_FALSE(intersects(Multiset{}, Multiset{1}));
}

TEST_CASE("multiset properties on random inputs") {
  std::mt19937 rng(20240902);
  std::uniform_int_distribution<Int> size_dist(0, 9);
  std::vector<Int> pool{-7, -3, -1, 0, 2, 5, 8};
  for (int trial = 0; trial < 300; ++trial) {
    Multiset p = testutil::random_multiset(rng, pool, size_dist(rng));
    Multiset q = testutil::random_multiset(rng, pool, size_dist(rng));

    Bidegree sum_deg = bidegree(add(p, q));
    CHECK(sum_deg.q == bidegree(p).q + bidegree(q).q);
    CHECK(sum_deg.c == bidegree(p).c + bidegree(q).c);

    CHECK(subtract(add(p, q), q) == p);

    // index pairing identity: m(P) + m~(P) = (|P|+1) * sum(P)
    CHECK(spread_m(p) + spread_m_tilde(p) == (static_cast<Int>(p.size()) + 1) * p.sum());

    bool share = false;
    for (Int x : support(p))
      if (q.contains(x)) share = true;
    CHECK(intersects(p, q) == share);
  }
}
