#pragma once

// Exact integer vector arithmetic. All values are 64-bit with checked
// overflow; vectors are renormalised by their content whenever the
// direction is all that matters, which keeps entries small at desk scale.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace richfan {

using Int = std::int64_t;
using Vec = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int dot(std::span<const Int> a, std::span<const Int> b);
Vec add(std::span<const Int> a, std::span<const Int> b);
Vec sub(std::span<const Int> a, std::span<const Int> b);
Vec scale(Int k, std::span<const Int> a);
/// k1*a + k2*b
Vec combine(Int k1, std::span<const Int> a, Int k2, std::span<const Int> b);

bool is_zero(std::span<const Int> v);
/// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(std::span<const Int> v);
/// v divided by its content (zero stays zero).
Vec primitive(std::span<const Int> v);
Vec unit_vector(std::size_t n, std::size_t i);

/// If b = k*a for a positive rational k, returns true.
bool same_ray(std::span<const Int> a, std::span<const Int> b);

std::string to_string(std::span<const Int> v);

/// Positive divisors of r in increasing order.
std::vector<Int> divisors(Int r);

/// The richness parameter r in N_{>=1} or infinity. Finite values are capped
/// at kMaxFinite so divisor enumeration stays cheap.
class Level {
 public:
  static constexpr Int kMaxFinite = 1'000'000;

  static Level infinite() { return Level(); }
  static Level finite(Int r);
  /// Accepts a positive integer or "inf"/"infinity".
  static Level parse(const std::string& text);

  bool is_infinite() const { return !value_.has_value(); }
  Int value() const;
  /// k divides r (always true for r = infinity, k >= 1).
  bool divisible_by(Int k) const;
  std::string str() const;

  friend bool operator==(const Level&, const Level&) = default;

 private:
  Level() = default;
  std::optional<Int> value_;
};

// --- lattice utilities -----------------------------------------------------

/// Basis of the saturated lattice {x in Z^n : <row, x> = 0 for all rows}.
/// An empty row list yields the standard basis.
std::vector<Vec> integer_kernel(const std::vector<Vec>& rows, std::size_t n);

/// Row-style Hermite normal form of the lattice spanned by `rows`. Zero rows
/// are dropped. The result is a canonical basis for the lattice.
std::vector<Vec> hermite_normal_form(std::vector<Vec> rows, std::size_t n);

/// Canonical basis of the saturated lattice span_Q(rows) ∩ Z^n.
std::vector<Vec> saturated_span(const std::vector<Vec>& rows, std::size_t n);

/// Rank over Q.
std::size_t rank(const std::vector<Vec>& rows, std::size_t n);

/// Determinant of a square integer matrix (fraction-free elimination).
Int determinant(std::vector<Vec> rows);

/// gcd of all maximal (k x k) minors of a k x n matrix of rank k; 0 if rank < k.
Int maximal_minor_gcd(const std::vector<Vec>& rows, std::size_t n);

/// Orthogonal projection of v onto the complement of span(basis), scaled to
/// a primitive integer vector.
Vec project_out(std::span<const Int> v, const std::vector<Vec>& basis);

}  // namespace richfan
