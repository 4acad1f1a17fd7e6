#pragma once

#include <vector>

#include "richfan/arith.hpp"
#include "richfan/cone.hpp"
#include "richfan/graph.hpp"
#include "richfan/monoid.hpp"

namespace richfan {

/// A graph metrized in a sharp fs monoid. Every edge length is a nonzero
/// element of the monoid; lengths are indexed like the graph's edges.
class TropicalCurve {
 public:
  /// Throws DisconnectedGraph, ShapeMismatch, NotAMember (for a non-member
  /// or zero length).
  TropicalCurve(TropicalGraph graph, SharpMonoid monoid, std::vector<Vec> lengths);

  const TropicalGraph& graph() const { return graph_; }
  const SharpMonoid& monoid() const { return monoid_; }
  const std::vector<Vec>& lengths() const { return lengths_; }
  const Vec& length(std::size_t edge) const { return lengths_.at(edge); }
  std::vector<Vec> lengths_of(const EdgeSet& edges) const;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;

 private:
  TropicalGraph graph_;
  SharpMonoid monoid_;
  std::vector<Vec> lengths_;
};

/// A family of real tropical curves over a rational cone σ ⊆ Q^m: edge e has
/// length x ↦ <length_map[e], x>, which must be nonnegative on σ.
class RealFamily {
 public:
  /// Throws DisconnectedGraph, ShapeMismatch, InvalidArgument (a length
  /// functional is negative somewhere on σ).
  RealFamily(TropicalGraph graph, RationalCone parameter_cone, std::vector<Vec> length_map);

  const TropicalGraph& graph() const { return graph_; }
  const RationalCone& parameter_cone() const { return cone_; }
  const std::vector<Vec>& length_map() const { return length_map_; }

 private:
  TropicalGraph graph_;
  RationalCone cone_;
  std::vector<Vec> length_map_;
};

/// Piecewise linear function on a curve. Slopes are stored per edge in the
/// canonical orientation, from the smaller vertex index to the larger one, so
/// value(larger) − value(smaller) = slope · length.
struct PLFunction {
  std::vector<Vec> vertex_values;
  std::vector<Int> slopes;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;
};

/// Every cut's lengths are r-close.
bool is_r_rich(const TropicalCurve& c, Level r);
/// Same predicate evaluated on circuit-connected components instead of cuts.
bool is_r_rich_by_components(const TropicalCurve& c, Level r);
/// Every cut's lengths are weakly r-close (r finite).
bool is_weakly_r_rich(const TropicalCurve& c, Int r);

/// Witness for an r-close cut: 0 on the side of vertex 0, r·root on the
/// other side, slope r/λ_e across each cut edge. Throws NotRClose,
/// InvalidArgument (not a cut).
PLFunction pl_witness(const TropicalCurve& c, const Cut& cut, Int r);

/// Compatibility with the lengths, slopes on cut edges are nonzero divisors
/// of r, and all other slopes vanish. Throws ShapeMismatch.
bool check_pl(const TropicalCurve& c, const PLFunction& f, const Cut& cut, Int r);

/// Family over Hom(M, R>=0) = dual of the monoid cone, lengths evaluated.
RealFamily to_real_family(const TropicalCurve& c);

/// For each cut and divisor tuple some edge is universally the smallest after
/// rescaling, decided by exact dual-cone membership.
bool family_is_weakly_r_rich(const RealFamily& f, Int r);

/// Pass to the quotient M → M/F for the face F spanned by `face_rays` and
/// contract the edges whose lengths die. Throws NotAFace.
TropicalCurve specialize(const TropicalCurve& c, const std::vector<Vec>& face_rays);

/// Quotient map Z^n → Z^(n−k) whose kernel is span(face_rays), as rows in
/// Hermite normal form.
std::vector<Vec> face_quotient_map(const SharpMonoid& m, const std::vector<Vec>& face_rays);

struct BasicModel {
  std::vector<EdgeSet> components;
  std::vector<Int> multipliers;  // per edge
  std::vector<Vec> roots;        // per component
  bool is_basic = false;
  TropicalCurve model;
};

/// Factor the lengths through the root map N^E → N^T. Throws NotRRich.
BasicModel basic_model(const TropicalCurve& c, Level r);

/// |E| − |T|. Throws NotRRich.
std::size_t enriched_parameter_dimension(const TropicalCurve& c, Int r);

}  // namespace richfan
