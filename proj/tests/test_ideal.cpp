#include <random>

#include "doctest.h"
#include "richfan/error.hpp"
#include "richfan/ideal.hpp"

using namespace richfan;

namespace {

std::vector<Vec> quadratic_minimal(std::vector<Vec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Vec> out;
  for (const auto& p : points) {
    bool dominated = false;
    for (const auto& q : points) {
      if (q == p) continue;
      bool le = true;
      for (std::size_t i = 0; i < p.size(); ++i) le = le && q[i] <= p[i];
      dominated = dominated || le;
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

MonomialIdeal ideal(std::size_t n, std::vector<Vec> gens) { return MonomialIdeal(n, std::move(gens)); }

}  // namespace

TEST_CASE("construction and validation") {
  const auto i = ideal(2, {{1, 1}, {2, 1}, {0, 3}, {1, 1}});
  CHECK(i.generators() == std::vector<Vec>{{0, 3}, {1, 1}});
  CHECK_FALSE(i.is_principal());
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(i.contains(Vec{3, 1}));
  CHECK_FALSE(i.contains(Vec{0, 2}));
  CHECK_THROWS_AS(ideal(2, {}), Error);
  CHECK_THROWS_AS(ideal(2, {{1, -1}}), Error);
  CHECK_THROWS_AS(ideal(2, {{1, 1, 1}}), Error);
}

TEST_CASE("products") {
  const auto xy = ideal(3, {{1, 0, 0}, {0, 1, 0}});
  const auto xz = ideal(3, {{1, 0, 0}, {0, 0, 1}});
  const auto yz = ideal(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(ideal_product(xy, xz).generators() == std::vector<Vec>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}});
  CHECK(ideal_product(xy, MonomialIdeal::unit(3)) == xy);
  const auto t = ideal_product(ideal_product(xy, xz), yz);
  CHECK(t.generators() ==
        std::vector<Vec>{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
  CHECK(ideal_product(xy, xz) == ideal_product(xz, xy));
  CHECK(ideal_product(ideal_product(xy, xz), yz) == ideal_product(xy, ideal_product(xz, yz)));
  CHECK_THROWS_AS(ideal_product(xy, MonomialIdeal::unit(2)), Error);
}

TEST_CASE("pullback to a contraction") {
  const auto t = ideal(3, {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
  const auto p = pullback_to_contraction(t, {0});
  CHECK(p.generators() == std::vector<Vec>{{0, 1}, {1, 0}});
  CHECK(pullback_to_contraction(t, {}) == t);
  CHECK(pullback_to_contraction(ideal(1, {{1}}), {0}).is_unit());
  CHECK_THROWS_AS(pullback_to_contraction(t, {3}), Error);
}

TEST_CASE("minimal elements agree with the quadratic oracle") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    // Small ranges use the staircase, huge ones fall back to the trie.
    const Int hi = trial % 3 == 0 ? Int{1} << 40 : 6;
    std::uniform_int_distribution<Int> entry(0, hi);
    std::vector<Vec> points(1 + rng() % 60, Vec(n));
    for (auto& p : points)
      for (auto& x : p) x = entry(rng);
    if (trial % 3 == 1) {
      // Offsets away from zero exercise the box shift.
      for (auto& p : points)
        for (auto& x : p) x += 1000;
    }
    REQUIRE(minimal_elements(points, n) == quadratic_minimal(points));
  }
  CHECK(minimal_elements({}, 2).empty());
  CHECK(minimal_elements({{}}, 0) == std::vector<Vec>{Vec{}});
}
