#include <limits>
#include <random>

#include "doctest.h"
#include "richfan/arith.hpp"
#include "richfan/error.hpp"
#include "support.hpp"

using namespace richfan;

namespace {

Int cofactor_det(const std::vector<Vec>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * cofactor_det(minor);
  }
  return total;
}

}  // namespace

TEST_CASE("checked arithmetic reports overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), Error);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), Error);
  try {
    checked_mul(big, big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArithmeticOverflow);
  }
}

TEST_CASE("vector helpers") {
  CHECK(primitive(Vec{4, -6, 0}) == Vec{2, -3, 0});
  CHECK(primitive(Vec{0, 0}) == Vec{0, 0});
  CHECK(content(Vec{-4, 6}) == 2);
  CHECK(same_ray(Vec{2, 4}, Vec{1, 2}));
  CHECK_FALSE(same_ray(Vec{2, 4}, Vec{-1, -2}));
  CHECK(combine(2, Vec{1, 0}, -1, Vec{0, 3}) == Vec{2, -3});
  CHECK(to_string(Vec{1, -2}) == "(1,-2)");
  CHECK_THROWS_AS(dot(Vec{1}, Vec{1, 2}), Error);
}

TEST_CASE("divisors match trial division") {
  for (Int r = 1; r <= 400; ++r) REQUIRE(divisors(r) == support::trial_divisors(r));
  CHECK(divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(divisors(0), Error);
}

TEST_CASE("levels") {
  CHECK(Level::parse("inf").is_infinite());
  CHECK(Level::parse("infinity").is_infinite());
  CHECK(Level::parse("6").value() == 6);
  CHECK(Level::parse("6").divisible_by(3));
  CHECK_FALSE(Level::parse("6").divisible_by(4));
  CHECK(Level::infinite().divisible_by(97));
  CHECK(Level::parse("inf").str() == "inf");
  CHECK_THROWS_AS(Level::parse("0"), Error);
  CHECK_THROWS_AS(Level::parse("3x"), Error);
  CHECK_THROWS_AS(Level::finite(1'000'001), Error);
  CHECK_THROWS_AS(Level::infinite().value(), Error);
}

TEST_CASE("kernel, rank and minors on random integer matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t rows = trial % 4;
    std::vector<Vec> a(rows, Vec(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    const auto ker = integer_kernel(a, n);
    REQUIRE(ker.size() + rank(a, n) == n);
    for (const auto& k : ker)
      for (const auto& row : a) REQUIRE(dot(k, row) == 0);
    // A saturated kernel basis has coprime maximal minors.
    if (!ker.empty()) REQUIRE(maximal_minor_gcd(ker, n) == 1);
    const auto hnf = hermite_normal_form(a, n);
    REQUIRE(hnf.size() == rank(a, n));
  }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> entry(-5, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<Vec> m(n, Vec(n));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    REQUIRE(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("saturated span and projection") {
  const auto s = saturated_span({{2, 0, 0}, {0, 2, 2}}, 3);
  CHECK(s.size() == 2);
  CHECK(maximal_minor_gcd(s, 3) == 1);
  // Projection modulo a span leaves a vector congruent to the input.
  const Vec p = project_out(Vec{3, 1, 2}, saturated_span({{1, 1, 1}}, 3));
  CHECK(dot(p, Vec{1, 1, 1}) == 0);
  CHECK(rank({p, {1, 1, 1}, {3, 1, 2}}, 3) == 2);
}
