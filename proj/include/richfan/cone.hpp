#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "richfan/arith.hpp"

namespace richfan {

/// A rational polyhedral cone in Q^n held in both descriptions.
///
/// V-description: `rays()` are primitive extremal rays (taken modulo the
/// lineality space when there is one) and `lineality()` is a canonical
/// lattice basis of the lineality space.
/// H-description: `facets()` are primitive inward normals, irredundant,
/// taken modulo the equations; `equations()` is a canonical lattice basis
/// of span(cone)^⊥.
///
/// Every list is sorted lexicographically, so two cones are equal iff their
/// canonical forms are equal.
class RationalCone {
 public:
  /// The cone {0} in Q^n.
  explicit RationalCone(std::size_t n = 0);

  /// cone(generators) + span(lineality_generators). Redundant or zero
  /// generators are allowed.
  static RationalCone from_generators(std::size_t n, const std::vector<Vec>& generators,
                                      const std::vector<Vec>& lineality_generators = {});

  /// {x : <a, x> >= 0 for a in inequalities, <b, x> = 0 for b in equations}.
  static RationalCone from_inequalities(std::size_t n, const std::vector<Vec>& inequalities,
                                        const std::vector<Vec>& equations = {});

  /// The nonnegative orthant of Q^n.
  static RationalCone orthant(std::size_t n);

  std::size_t ambient_rank() const { return n_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lineality_; }
  const std::vector<Vec>& facets() const { return facets_; }
  const std::vector<Vec>& equations() const { return equations_; }

  std::size_t dim() const { return n_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_simplicial() const { return is_pointed() && rays_.size() == dim(); }

  /// Exact membership for an integer (or scaled rational) point.
  bool contains(std::span<const Int> x) const;
  /// Every generator of `other` lies in this cone.
  bool contains(const RationalCone& other) const;
  /// Point lies in the relative interior.
  bool contains_in_relative_interior(std::span<const Int> x) const;

  /// The face cut out by the supporting functional `normal` (which must be
  /// nonnegative on the cone).
  RationalCone face(std::span<const Int> normal) const;

  RationalCone intersect(const RationalCone& other) const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;
  friend std::strong_ordering operator<=>(const RationalCone& a, const RationalCone& b);

 private:
  std::size_t n_;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
  std::vector<Vec> facets_;
  std::vector<Vec> equations_;
};

/// σ^∨ = {y : <y, x> >= 0 for all x in σ}.
RationalCone dual_cone(const RationalCone& cone);

/// Simplicial, full rank, and the primitive rays form a Z-basis of Z^n.
bool is_unimodular(const RationalCone& cone);

/// A fan supported in the nonnegative orthant of Q^n, stored by its maximal
/// cones in canonical order.
class Fan {
 public:
  explicit Fan(std::size_t n = 0) : n_(n) {}
  Fan(std::size_t n, std::vector<RationalCone> cones);

  std::size_t ambient_rank() const { return n_; }
  const std::vector<RationalCone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t n_;
  std::vector<RationalCone> cones_;
};

/// Maximal cones cover the orthant. Checked by facet pairing (each facet
/// lies on the orthant boundary or is shared by exactly two maximal cones)
/// together with a seeded interior-point sampling pass.
bool is_complete_on_orthant(const Fan& fan);

/// Full-dimensional pairwise intersections, canonicalised and deduplicated.
Fan common_refinement(const Fan& a, const Fan& b);

/// Intersect every cone with {x_i = 0 : i in coords} and drop those
/// coordinates. Only cones that stay full-dimensional in the smaller orthant
/// are kept.
Fan restrict_to_coordinate_face(const Fan& fan, const std::vector<std::size_t>& coords);

}  // namespace richfan
