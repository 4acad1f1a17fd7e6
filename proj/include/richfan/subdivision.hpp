#pragma once

#include <map>
#include <optional>
#include <vector>

#include "richfan/cone.hpp"
#include "richfan/graph.hpp"
#include "richfan/ideal.hpp"
#include "richfan/monoid.hpp"
#include "richfan/tropical.hpp"

namespace richfan {

/// One entry of a choice function: in cut `cut` (index into enumerate_cuts),
/// after rescaling edge lengths by `multipliers` (aligned with the cut's
/// edges), `chosen` is a shortest edge.
struct CutSelection {
  std::size_t cut;
  std::vector<Int> multipliers;
  std::size_t chosen;

  friend bool operator==(const CutSelection&, const CutSelection&) = default;
};

/// A choice of shortest edge per cut. For r = 1 there is one selection per
/// cut with all multipliers 1; the tuple-extended form used for r > 1 has one
/// selection per (cut, divisor tuple).
struct ChoiceFunction {
  std::vector<CutSelection> selections;

  /// r = 1 choice from one chosen edge per cut (in enumerate_cuts order).
  static ChoiceFunction simple(const TropicalGraph& g, const std::vector<std::size_t>& chosen);
};

/// Order generated by a minimal r = 1 choice: one minimum per
/// circuit-connected component and a predecessor for every other edge.
struct CutOrder {
  EdgeSet minima;
  std::map<std::size_t, std::size_t> pred;

  friend bool operator==(const CutOrder&, const CutOrder&) = default;
};

/// Product over cuts c and divisor tuples λ of r of (x_e^λ_e : e ∈ c), taken
/// on the minimal chart where the length of edge e is the e-th basis vector.
/// Throws DisconnectedGraph.
MonomialIdeal richness_ideal(const TropicalGraph& g, Int r);

/// Linearity domains of x ↦ min_m <m, x> on the orthant: one maximal cone per
/// generator whose domain is full-dimensional.
Fan newton_subdivision(const MonomialIdeal& ideal);

/// {x >= 0 : λ_f x_f <= λ_e x_e for every selection and every e in its cut}.
/// Throws InvalidChoice.
RationalCone choice_cone(const TropicalGraph& g, const ChoiceFunction& f, Int r);

/// Every r = 1 choice function (one edge per cut), in odometer order.
std::vector<ChoiceFunction> all_choice_functions(const TropicalGraph& g);

/// Full-dimensional choice cones over all tuple-extended choice functions.
/// For r = 1 these are the cones M_f. Throws InvalidArgument when the number
/// of choice functions exceeds a desk-scale bound.
Fan choice_function_fan(const TropicalGraph& g, Int r = 1);

/// newton_subdivision(richness_ideal(g, r)).
Fan weakly_rich_fan(const TropicalGraph& g, Int r);

/// Index of a maximal cone containing the image of the parameter cone.
/// Throws DimensionMismatch.
std::optional<std::size_t> factoring_cone(const RealFamily& family, const Fan& fan);
bool factors_through(const RealFamily& family, const Fan& fan);

/// Throws NotMinimalOrder if the generated preorder is not antisymmetric or
/// lacks the forest structure; InvalidChoice if f is not an r = 1 choice.
CutOrder cut_order_from_choice(const TropicalGraph& g, const ChoiceFunction& f);

/// Monoid generated by N^E and {e − f(c)}. Throws NotMinimalOrder.
SharpMonoid choice_monoid(const TropicalGraph& g, const ChoiceFunction& f);

struct SmoothnessReport {
  std::vector<bool> unimodular;  // per maximal cone
  bool smooth = true;
};

SmoothnessReport smoothness_report(const Fan& fan);

}  // namespace richfan
