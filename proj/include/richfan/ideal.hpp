#pragma once

#include <vector>

#include "richfan/arith.hpp"

namespace richfan {

/// Monomial ideal in N^n held by its minimal generators (sorted
/// lexicographically; no generator divides another).
class MonomialIdeal {
 public:
  /// Throws InvalidArgument for an empty generator list or a negative
  /// exponent, DimensionMismatch for a wrong-length generator.
  MonomialIdeal(std::size_t rank, std::vector<Vec> generators);

  static MonomialIdeal unit(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return generators_; }
  bool is_unit() const;
  bool is_principal() const { return generators_.size() == 1; }
  /// Some generator divides the monomial.
  bool contains(std::span<const Int> monomial) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t rank_;
  std::vector<Vec> generators_;
};

/// The componentwise-minimal elements of `points` (duplicates collapse),
/// sorted lexicographically.
std::vector<Vec> minimal_elements(std::vector<Vec> points, std::size_t n);

/// Minimal generators of {a + b}. Throws DimensionMismatch.
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// Set the coordinates in `coords` to 1 (i.e. delete them) and re-minimise.
/// A generator supported inside `coords` turns the result into the unit
/// ideal. Throws UnknownCoordinate.
MonomialIdeal pullback_to_contraction(const MonomialIdeal& i, const std::vector<std::size_t>& coords);

}  // namespace richfan
