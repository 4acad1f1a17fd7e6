#pragma once

#include <optional>
#include <vector>

#include "richfan/arith.hpp"
#include "richfan/cone.hpp"

namespace richfan {

/// A sharp fine saturated monoid M = σ ∩ Z^n for a strongly convex rational
/// cone σ ⊆ Q^n. Every such M is fine and saturated by construction; this
/// class only ever represents monoids of that form. Sharpness is the strong
/// convexity of σ, checked on construction.
class SharpMonoid {
 public:
  /// Throws InvalidArgument if the generated cone contains a line.
  SharpMonoid(std::size_t ambient_rank, const std::vector<Vec>& generators);
  explicit SharpMonoid(RationalCone cone);

  /// N^n with the standard basis as rays.
  static SharpMonoid free(std::size_t n);

  std::size_t ambient_rank() const { return cone_.ambient_rank(); }
  /// Rank of the group generated by M.
  std::size_t dim() const { return cone_.dim(); }
  const RationalCone& cone() const { return cone_; }
  const std::vector<Vec>& rays() const { return cone_.rays(); }

  friend bool operator==(const SharpMonoid&, const SharpMonoid&) = default;

 private:
  RationalCone cone_;
};

/// x ∈ σ ∩ Z^n. Throws DimensionMismatch.
bool contains(const SharpMonoid& m, std::span<const Int> x);

/// b − a ∈ M. Throws NotAMember.
bool divides(const SharpMonoid& m, std::span<const Int> a, std::span<const Int> b);

/// The element of s dividing all others, if any. Throws EmptySet, NotAMember.
std::optional<Vec> smallest_element(const SharpMonoid& m, const std::vector<Vec>& s);

/// Exists a ∈ M and λ_i | r with λ_i·a = s_i. Throws NotAMember.
bool is_r_close(const SharpMonoid& m, const std::vector<Vec>& s, Level r);

struct RootDecomposition {
  Vec root;
  std::vector<Int> multipliers;  // s_i = multipliers[i] * root
};

/// The largest a with s_i = λ_i·a and λ_i | r. For finite r this picks the
/// largest admissible point on the common ray. Throws NotRClose, AllZero,
/// NotAMember.
RootDecomposition root_decomposition(const SharpMonoid& m, const std::vector<Vec>& s, Level r);
Vec root(const SharpMonoid& m, const std::vector<Vec>& s, Level r);

/// For every tuple (λ_i) of divisors of r, {λ_i s_i} has a smallest element.
/// Throws NotAMember, InvalidArgument (r out of range).
bool is_weakly_r_close(const SharpMonoid& m, const std::vector<Vec>& s, Int r);

/// Minimal generating set of M, sorted. Enumerates lattice points in the
/// bounding box of the zonotope spanned by the rays; intended for ambient
/// rank <= 8 with small ray entries.
std::vector<Vec> hilbert_basis(const SharpMonoid& m);

/// M ≅ N^dim.
bool is_free(const SharpMonoid& m);

}  // namespace richfan
