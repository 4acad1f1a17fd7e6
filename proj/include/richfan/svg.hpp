#pragma once

#include <string>
#include <utility>
#include <vector>

#include "richfan/cone.hpp"

namespace richfan {

/// A rank-3 fan intersected with the simplex x1 + x2 + x3 = 1. Vertices are
/// the distinct primitive rays of the maximal cones; each region lists its
/// vertex indices in cyclic order, starting at the smallest index. Regions
/// are indexed like fan.cones().
struct CrossSection {
  std::vector<Vec> vertices;
  std::vector<std::vector<std::size_t>> regions;
};

/// Throws RankNotThree, MalformedFan (a maximal cone that is not a pointed
/// full-dimensional cone in the orthant).
CrossSection cross_section(const Fan& fan);

/// Region pairs sharing a boundary segment of positive length, found by an
/// exact collinearity and overlap test on the drawn polygons.
std::vector<std::pair<std::size_t, std::size_t>> region_adjacency(const CrossSection& cs);

/// Maximal cone pairs meeting in a codimension-one face.
std::vector<std::pair<std::size_t, std::size_t>> cone_adjacency(const Fan& fan);

/// Deterministic SVG drawing: x1 at the top corner, x2 bottom left, x3
/// bottom right, vertices placed by barycentric coordinates.
std::string render_svg(const CrossSection& cs);

}  // namespace richfan
