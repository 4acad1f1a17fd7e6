#include "richfan/subdivision.hpp"

#include <algorithm>
#include <set>

#include "richfan/error.hpp"
#include "richfan/parallel.hpp"

namespace richfan {

namespace {

constexpr std::size_t kMaxChoiceFunctions = 2'000'000;

// (cut index, multiplier tuple) pairs that a tuple-extended choice function
// must decide.
std::vector<std::pair<std::size_t, std::vector<Int>>> choice_slots(const std::vector<Cut>& cuts, Int r) {
  const auto divs = divisors(r);
  std::vector<std::pair<std::size_t, std::vector<Int>>> slots;
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    std::vector<std::size_t> pick(cuts[c].size(), 0);
    while (true) {
      std::vector<Int> lambda;
      for (std::size_t p : pick) lambda.push_back(divs[p]);
      slots.emplace_back(c, std::move(lambda));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == divs.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return slots;
}

void validate_choice(const std::vector<Cut>& cuts, const ChoiceFunction& f, Int r, bool require_unit) {
  std::vector<bool> covered(cuts.size(), false);
  for (const auto& s : f.selections) {
    if (s.cut >= cuts.size()) throw Error(ErrorCode::InvalidChoice, "selection refers to an unknown cut");
    const Cut& cut = cuts[s.cut];
    if (std::find(cut.begin(), cut.end(), s.chosen) == cut.end())
      throw Error(ErrorCode::InvalidChoice, "chosen edge does not lie in its cut");
    if (s.multipliers.size() != cut.size())
      throw Error(ErrorCode::InvalidChoice, "multiplier tuple does not match the cut size");
    for (Int l : s.multipliers) {
      if (l < 1 || r % l != 0)
        throw Error(ErrorCode::InvalidChoice, "multiplier " + std::to_string(l) + " does not divide r");
      if (require_unit && l != 1) throw Error(ErrorCode::InvalidChoice, "expected an r = 1 choice function");
    }
    covered[s.cut] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw Error(ErrorCode::InvalidChoice, "choice function leaves a cut undecided");
}

std::vector<Vec> orthant_inequalities(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

}  // namespace

ChoiceFunction ChoiceFunction::simple(const TropicalGraph& g, const std::vector<std::size_t>& chosen) {
  const auto cuts = enumerate_cuts(g);
  if (chosen.size() != cuts.size()) throw Error(ErrorCode::InvalidChoice, "need one chosen edge per cut");
  ChoiceFunction f;
  for (std::size_t c = 0; c < cuts.size(); ++c)
    f.selections.push_back(CutSelection{c, std::vector<Int>(cuts[c].size(), 1), chosen[c]});
  return f;
}

MonomialIdeal richness_ideal(const TropicalGraph& g, Int r) {
  const auto cuts = enumerate_cuts(g);
  const std::size_t n = g.edge_count();
  MonomialIdeal product = MonomialIdeal::unit(n);
  for (const auto& [cut_index, lambda] : choice_slots(cuts, Level::finite(r).value())) {
    const Cut& cut = cuts[cut_index];
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < cut.size(); ++i) gens.push_back(scale(lambda[i], unit_vector(n, cut[i])));
    product = ideal_product(product, MonomialIdeal(n, std::move(gens)));
  }
  return product;
}

Fan newton_subdivision(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.rank();
  const auto& gens = ideal.generators();
  auto cones = parallel_map<std::optional<RationalCone>>(gens.size(), [&](std::size_t k) {
    // Nearby generators first: they are the likely facets, which keeps the
    // intermediate double description small.
    std::vector<Vec> diffs;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != k) diffs.push_back(sub(gens[j], gens[k]));
    auto l1 = [](const Vec& v) {
      Int s = 0;
      for (Int x : v) s += x < 0 ? -x : x;
      return s;
    };
    std::stable_sort(diffs.begin(), diffs.end(), [&](const Vec& a, const Vec& b) { return l1(a) < l1(b); });
    std::vector<Vec> ineqs = orthant_inequalities(n);
    ineqs.insert(ineqs.end(), diffs.begin(), diffs.end());
    RationalCone c = RationalCone::from_inequalities(n, ineqs);
    return c.is_full_dimensional() ? std::optional<RationalCone>(std::move(c)) : std::nullopt;
  });
  std::vector<RationalCone> maximal;
  for (auto& c : cones)
    if (c) maximal.push_back(std::move(*c));
  return Fan(n, std::move(maximal));
}

RationalCone choice_cone(const TropicalGraph& g, const ChoiceFunction& f, Int r) {
  Level::finite(r);
  const auto cuts = enumerate_cuts(g);
  validate_choice(cuts, f, r, r == 1);
  const std::size_t n = g.edge_count();
  std::vector<Vec> ineqs = orthant_inequalities(n);
  for (const auto& s : f.selections) {
    const Cut& cut = cuts[s.cut];
    const auto at = std::find(cut.begin(), cut.end(), s.chosen) - cut.begin();
    const Int chosen_scale = s.multipliers[static_cast<std::size_t>(at)];
    for (std::size_t i = 0; i < cut.size(); ++i) {
      if (cut[i] == s.chosen) continue;
      Vec a(n, 0);
      a[cut[i]] = s.multipliers[i];
      a[s.chosen] = checked_sub(a[s.chosen], chosen_scale);
      ineqs.push_back(std::move(a));
    }
  }
  return RationalCone::from_inequalities(n, ineqs);
}

std::vector<ChoiceFunction> all_choice_functions(const TropicalGraph& g) {
  const auto cuts = enumerate_cuts(g);
  std::size_t total = 1;
  for (const auto& c : cuts) {
    total *= c.size();
    if (total > kMaxChoiceFunctions) throw Error(ErrorCode::InvalidArgument, "too many choice functions");
  }
  std::vector<ChoiceFunction> out;
  std::vector<std::size_t> pick(cuts.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < cuts.size(); ++c) chosen.push_back(cuts[c][pick[c]]);
    ChoiceFunction f;
    for (std::size_t c = 0; c < cuts.size(); ++c)
      f.selections.push_back(CutSelection{c, std::vector<Int>(cuts[c].size(), 1), chosen[c]});
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cuts[i].size()) pick[i++] = 0;
  }
  return out;
}

Fan choice_function_fan(const TropicalGraph& g, Int r) {
  const auto cuts = enumerate_cuts(g);
  const auto slots = choice_slots(cuts, Level::finite(r).value());
  const std::size_t n = g.edge_count();
  std::size_t total = 1;
  for (const auto& slot : slots) {
    total *= cuts[slot.first].size();
    if (total > kMaxChoiceFunctions) throw Error(ErrorCode::InvalidArgument, "too many choice functions");
  }
  auto cones = parallel_map<std::optional<RationalCone>>(total, [&](std::size_t index) {
    ChoiceFunction f;
    for (const auto& [cut_index, lambda] : slots) {
      const Cut& cut = cuts[cut_index];
      f.selections.push_back(CutSelection{cut_index, lambda, cut[index % cut.size()]});
      index /= cut.size();
    }
    RationalCone c = choice_cone(g, f, r);
    return c.is_full_dimensional() ? std::optional<RationalCone>(std::move(c)) : std::nullopt;
  });
  std::vector<RationalCone> maximal;
  for (auto& c : cones)
    if (c) maximal.push_back(std::move(*c));
  return Fan(n, std::move(maximal));
}

Fan weakly_rich_fan(const TropicalGraph& g, Int r) { return newton_subdivision(richness_ideal(g, r)); }

std::optional<std::size_t> factoring_cone(const RealFamily& family, const Fan& fan) {
  const std::size_t n = family.graph().edge_count();
  if (fan.ambient_rank() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "fan of rank " + std::to_string(fan.ambient_rank()) + " for " + std::to_string(n) + " edges");
  const auto& rows = family.length_map();
  auto image = [&](const Vec& x) {
    Vec y(n);
    for (std::size_t e = 0; e < n; ++e) y[e] = dot(rows[e], x);
    return y;
  };
  std::vector<Vec> images;
  for (const auto& r : family.parameter_cone().rays()) images.push_back(image(r));
  for (const auto& l : family.parameter_cone().lineality()) {
    images.push_back(image(l));
    images.push_back(scale(-1, images.back()));
  }
  for (std::size_t k = 0; k < fan.size(); ++k) {
    const auto& cone = fan.cones()[k];
    if (std::all_of(images.begin(), images.end(), [&](const Vec& y) { return cone.contains(y); })) return k;
  }
  return std::nullopt;
}

bool factors_through(const RealFamily& family, const Fan& fan) {
  return factoring_cone(family, fan).has_value();
}

CutOrder cut_order_from_choice(const TropicalGraph& g, const ChoiceFunction& f) {
  const auto cuts = enumerate_cuts(g);
  validate_choice(cuts, f, 1, true);
  const std::size_t m = g.edge_count();

  // le[a][b]: a <= b in the generated preorder.
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (std::size_t e = 0; e < m; ++e) le[e][e] = true;
  for (const auto& s : f.selections)
    for (std::size_t e : cuts[s.cut]) le[s.chosen][e] = true;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (le[k][j]) le[i][j] = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (le[a][b] && le[b][a])
        throw Error(ErrorCode::NotMinimalOrder, "choice generates a cycle between '" + g.edge(a).id +
                                                    "' and '" + g.edge(b).id + "'");

  CutOrder order;
  for (const auto& block : circuit_components(g)) {
    std::vector<std::size_t> minima;
    for (std::size_t e : block) {
      bool minimal = true;
      for (std::size_t x = 0; x < m && minimal; ++x)
        if (x != e && le[x][e]) minimal = false;
      if (minimal) minima.push_back(e);
    }
    if (minima.size() != 1)
      throw Error(ErrorCode::NotMinimalOrder, "component without a unique minimal edge");
    order.minima.push_back(minima.front());
    for (std::size_t e : block) {
      if (e == minima.front()) continue;
      std::vector<std::size_t> below;
      for (std::size_t x = 0; x < m; ++x)
        if (x != e && le[x][e]) below.push_back(x);
      // The edges below e must form a chain; its top is the predecessor.
      std::optional<std::size_t> top;
      for (std::size_t b : below)
        if (std::all_of(below.begin(), below.end(), [&](std::size_t x) { return le[x][b]; })) top = b;
      if (!top) throw Error(ErrorCode::NotMinimalOrder, "edge '" + g.edge(e).id + "' has no unique predecessor");
      order.pred[e] = *top;
    }
  }
  std::sort(order.minima.begin(), order.minima.end());

  // The predecessor forest must regenerate the whole order.
  std::vector<std::vector<bool>> regenerated(m, std::vector<bool>(m, false));
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t x = e;;) {
      regenerated[x][e] = true;
      auto it = order.pred.find(x);
      if (it == order.pred.end()) break;
      x = it->second;
    }
  }
  if (regenerated != le) throw Error(ErrorCode::NotMinimalOrder, "order is not generated by its Hasse forest");
  return order;
}

SharpMonoid choice_monoid(const TropicalGraph& g, const ChoiceFunction& f) {
  cut_order_from_choice(g, f);
  const auto cuts = enumerate_cuts(g);
  const std::size_t n = g.edge_count();
  std::vector<Vec> gens = orthant_inequalities(n);
  for (const auto& s : f.selections)
    for (std::size_t e : cuts[s.cut])
      if (e != s.chosen) gens.push_back(sub(unit_vector(n, e), unit_vector(n, s.chosen)));
  return SharpMonoid(n, gens);
}

SmoothnessReport smoothness_report(const Fan& fan) {
  SmoothnessReport report;
  for (const auto& c : fan.cones()) {
    report.unimodular.push_back(is_unimodular(c));
    report.smooth = report.smooth && report.unimodular.back();
  }
  return report;
}

}  // namespace richfan
