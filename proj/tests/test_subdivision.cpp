#include <random>

#include "doctest.h"
#include "richfan/error.hpp"
#include "richfan/subdivision.hpp"
#include "support.hpp"

using namespace richfan;
using support::make_graph;

namespace {

RationalCone gen(std::size_t n, std::vector<Vec> rays) { return RationalCone::from_generators(n, rays); }

std::vector<Vec> exps(std::initializer_list<Vec> v) { return std::vector<Vec>(v); }

// The six chambers x_{p0} >= x_{p1} >= x_{p2} >= 0, built from their rays.
Fan permutation_fan() {
  std::vector<RationalCone> cones;
  std::vector<std::size_t> p{0, 1, 2};
  do {
    Vec a(3, 0), b(3, 0), c(3, 1);
    a[p[0]] = 1;
    b[p[0]] = b[p[1]] = 1;
    cones.push_back(gen(3, {a, b, c}));
  } while (std::next_permutation(p.begin(), p.end()));
  return Fan(3, cones);
}

// Parallel edges a, b, c with a triangle d, e, f hanging off one end.
TropicalGraph parallel_and_triangle() { return make_graph(4, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 1}}); }

}  // namespace

TEST_CASE("richness ideals") {
  CHECK(richness_ideal(support::triangle(), 1).generators() ==
        exps({{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}));
  CHECK(richness_ideal(support::two_gon(), 1).generators() == exps({{0, 1}, {1, 0}}));
  CHECK(richness_ideal(make_graph(2, {{0, 1}}), 1).generators() == exps({{1}}));
  // Theta at r = 2: product over the 8 tuples of (x^a, y^b, z^c).
  const auto th = richness_ideal(support::theta(), 2);
  MonomialIdeal expected = MonomialIdeal::unit(3);
  support::for_each_tuple({1, 2}, 3, [&](const std::vector<Int>& l) {
    expected = ideal_product(expected, MonomialIdeal(3, {{l[0], 0, 0}, {0, l[1], 0}, {0, 0, l[2]}}));
  });
  CHECK(th == expected);
  CHECK(richness_ideal(make_graph(1, {{0, 0}}), 3).is_unit());
  CHECK_THROWS_AS(richness_ideal(make_graph(2, {}), 1), Error);
}

TEST_CASE("Newton subdivisions") {
  const auto two = newton_subdivision(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  CHECK(two == Fan(2, {gen(2, {{1, 0}, {1, 1}}), gen(2, {{1, 1}, {0, 1}})}));
  CHECK(newton_subdivision(MonomialIdeal(3, {{1, 2, 0}})) == Fan(3, {RationalCone::orthant(3)}));
  // xyz is a minimal generator but not a vertex, so it owns no chamber.
  const auto t = richness_ideal(support::triangle(), 1);
  CHECK(t.generators().size() == 7);
  CHECK(newton_subdivision(t) == permutation_fan());
}

TEST_CASE("choice cones") {
  const auto two = support::two_gon();
  // f(c) is the shortest edge of c.
  CHECK(choice_cone(two, ChoiceFunction::simple(two, {0}), 1) == gen(2, {{0, 1}, {1, 1}}));
  CHECK(choice_cone(two, ChoiceFunction::simple(two, {1}), 1) == gen(2, {{1, 0}, {1, 1}}));
  const auto t = support::triangle();
  // Cuts are {e1,e2}, {e1,e3}, {e2,e3}.
  CHECK(choice_cone(t, ChoiceFunction::simple(t, {0, 0, 1}), 1) == gen(3, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  const auto cyclic = choice_cone(t, ChoiceFunction::simple(t, {0, 2, 1}), 1);
  CHECK(cyclic == gen(3, {{1, 1, 1}}));
  CHECK(all_choice_functions(t).size() == 8);

  CHECK_THROWS_AS(ChoiceFunction::simple(t, {0, 0}), Error);
  CHECK_THROWS_AS(choice_cone(t, ChoiceFunction::simple(t, {2, 0, 1}), 1), Error);
  ChoiceFunction bad = ChoiceFunction::simple(two, {0});
  bad.selections[0].multipliers = {1, 3};
  CHECK_THROWS_AS(choice_cone(two, bad, 2), Error);
  ChoiceFunction partial;
  CHECK_THROWS_AS(choice_cone(two, partial, 1), Error);
}

TEST_CASE("weakly rich fans") {
  CHECK(weakly_rich_fan(support::two_gon(), 1) ==
        Fan(2, {gen(2, {{1, 0}, {1, 1}}), gen(2, {{1, 1}, {0, 1}})}));
  const auto t = weakly_rich_fan(support::triangle(), 1);
  CHECK(t == permutation_fan());
  CHECK(smoothness_report(t).smooth);
  const auto tree = make_graph(4, {{0, 1}, {1, 2}, {1, 3}, {3, 3}});
  CHECK(weakly_rich_fan(tree, 1) == Fan(4, {RationalCone::orthant(4)}));
  CHECK(weakly_rich_fan(tree, 2) == Fan(4, {RationalCone::orthant(4)}));
}

TEST_CASE("triangle at r = 2 is complete but not smooth") {
  const auto f = weakly_rich_fan(support::triangle(), 2);
  CHECK(is_complete_on_orthant(f));
  const auto rep = smoothness_report(f);
  CHECK_FALSE(rep.smooth);
  CHECK(std::any_of(f.cones().begin(), f.cones().end(), [](const RationalCone& c) { return c.rays().size() >= 4; }));
}

TEST_CASE("factoring through the fan") {
  const auto t = support::triangle();
  const auto fan = weakly_rich_fan(t, 1);
  const RealFamily c1(t, RationalCone::orthant(3), {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  const auto k = factoring_cone(c1, fan);
  REQUIRE(k.has_value());
  // Lengths grow along the edge order, so the chamber is x1 <= x2 <= x3.
  CHECK(fan.cones()[*k] == gen(3, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  const RealFamily id(t, RationalCone::orthant(3), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(factors_through(id, fan));
  const auto tree = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(factors_through(RealFamily(tree, RationalCone::orthant(2), {{1, 0}, {0, 1}}),
                        Fan(2, {RationalCone::orthant(2)})));
  CHECK_THROWS_AS(factoring_cone(id, Fan(2, {RationalCone::orthant(2)})), Error);
}

TEST_CASE("cut orders") {
  const auto g = parallel_and_triangle();
  const auto cuts = enumerate_cuts(g);
  REQUIRE(cuts == std::vector<Cut>{{0, 1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const auto o = cut_order_from_choice(g, ChoiceFunction::simple(g, {0, 3, 3, 4}));
  CHECK(o.minima == EdgeSet{0, 3});
  CHECK(o.pred == std::map<std::size_t, std::size_t>{{1, 0}, {2, 0}, {4, 3}, {5, 4}});

  const auto path = make_graph(3, {{0, 1}, {1, 2}});
  const auto p = cut_order_from_choice(path, ChoiceFunction::simple(path, {0, 1}));
  CHECK(p.minima == EdgeSet{0, 1});
  CHECK(p.pred.empty());

  const auto two = support::two_gon();
  const auto q = cut_order_from_choice(two, ChoiceFunction::simple(two, {0}));
  CHECK(q.minima == EdgeSet{0});
  CHECK(q.pred == std::map<std::size_t, std::size_t>{{1, 0}});

  const auto t = support::triangle();
  try {
    cut_order_from_choice(t, ChoiceFunction::simple(t, {0, 2, 1}));
    FAIL("expected NotMinimalOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMinimalOrder);
  }
}

TEST_CASE("choice monoids") {
  const auto two = support::two_gon();
  const auto m = choice_monoid(two, ChoiceFunction::simple(two, {0}));
  CHECK(m == SharpMonoid(2, {{1, 0}, {-1, 1}}));
  CHECK(is_free(m));
  const auto path = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(choice_monoid(path, ChoiceFunction::simple(path, {0, 1})) == SharpMonoid::free(2));

  const auto g = parallel_and_triangle();
  const auto fig = choice_monoid(g, ChoiceFunction::simple(g, {0, 3, 3, 4}));
  // a, d, b − a, c − a, e − d, f − e
  std::vector<Vec> expected{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0},  {-1, 1, 0, 0, 0, 0},
                            {-1, 0, 1, 0, 0, 0}, {0, 0, 0, -1, 1, 0}, {0, 0, 0, 0, -1, 1}};
  std::sort(expected.begin(), expected.end());
  CHECK(hilbert_basis(fig) == expected);
  CHECK(is_free(fig));
}

TEST_CASE("smoothness reports") {
  CHECK(smoothness_report(Fan(3, {RationalCone::orthant(3)})).smooth);
  const auto rep = smoothness_report(permutation_fan());
  CHECK(rep.unimodular == std::vector<bool>(6, true));
}

TEST_CASE("both constructions agree at r = 1 and are smooth, on every graph up to five edges") {
  for (const auto& sg : support::connected_graphs(5)) {
    const auto g = support::build(sg);
    const auto fan = weakly_rich_fan(g, 1);
    REQUIRE(choice_function_fan(g, 1) == fan);
    REQUIRE(smoothness_report(fan).smooth);
    REQUIRE(is_complete_on_orthant(fan));
  }
}

TEST_CASE("completeness for r = 2, 3") {
  for (const auto& sg : support::connected_graphs(3)) {
    const auto g = support::build(sg);
    for (Int r : {2, 3}) REQUIRE(is_complete_on_orthant(weakly_rich_fan(g, r)));
  }
  for (Int r : {2, 3}) REQUIRE(is_complete_on_orthant(weakly_rich_fan(make_graph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}), r)));
}

TEST_CASE("tuple-extended choice cones tile the r > 1 fan") {
  for (const auto& sg : support::connected_graphs(3)) {
    const auto g = support::build(sg);
    for (Int r : {2, 3}) REQUIRE(choice_function_fan(g, r) == weakly_rich_fan(g, r));
  }
}

TEST_CASE("contraction compatibility of fans") {
  for (const auto& sg : support::connected_graphs(4)) {
    const auto g = support::build(sg);
    for (Int r : {1, 2}) {
      if (r == 2 && g.edge_count() > 3) continue;
      const auto fan = weakly_rich_fan(g, r);
      for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        EdgeSet s;
        for (std::size_t e = 0; e < g.edge_count(); ++e)
          if (mask >> e & 1u) s.push_back(e);
        REQUIRE(restrict_to_coordinate_face(fan, s) == weakly_rich_fan(contract(g, s), r));
      }
    }
  }
}

TEST_CASE("basic models of 1-rich curves land in a chamber") {
  std::mt19937_64 rng(61);
  for (const auto& sg : support::connected_graphs(4)) {
    const auto g = support::build(sg);
    if (g.edge_count() == 0) continue;
    const auto fan = weakly_rich_fan(g, 1);
    const auto blocks = circuit_components(g);
    const std::size_t k = blocks.size();
    // Equal lengths inside each component make the curve 1-rich.
    std::vector<Vec> lengths(g.edge_count());
    for (std::size_t t = 0; t < k; ++t) {
      const Int m = 1 + static_cast<Int>(rng() % 3);
      for (std::size_t e : blocks[t]) lengths[e] = scale(m, unit_vector(k, t));
    }
    const TropicalCurve c(g, SharpMonoid::free(k), lengths);
    const auto b = basic_model(c, Level::finite(1));
    REQUIRE(factors_through(to_real_family(b.model), fan));
  }
}
