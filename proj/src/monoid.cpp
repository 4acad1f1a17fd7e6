#include "richfan/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "richfan/error.hpp"

namespace richfan {

namespace {

constexpr Int kMaxBoxPoints = 50'000'000;

void require_member(const SharpMonoid& m, std::span<const Int> x) {
  if (!contains(m, x)) throw Error(ErrorCode::NotAMember, to_string(x) + " is not in the monoid");
}

// Common ray data of a nonempty set of nonzero elements: primitive generator
// and multiplicities. Empty optional if they are not on one ray.
std::optional<std::pair<Vec, std::vector<Int>>> common_ray(const std::vector<Vec>& s) {
  Vec p = primitive(s.front());
  std::vector<Int> mult;
  for (const auto& x : s) {
    if (primitive(x) != p) return std::nullopt;
    mult.push_back(content(x));
  }
  return std::make_pair(std::move(p), std::move(mult));
}

// Largest k dividing every multiplicity with mult_i / k | r.
std::optional<Int> largest_admissible_scale(const std::vector<Int>& mult, Level r) {
  Int g = 0;
  for (Int x : mult) g = std::gcd(g, x);
  if (r.is_infinite()) return g;
  const auto ks = divisors(g);
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    const Int k = *it;
    if (std::all_of(mult.begin(), mult.end(), [&](Int x) { return r.divisible_by(x / k); })) return k;
  }
  return std::nullopt;
}

}  // namespace

SharpMonoid::SharpMonoid(std::size_t ambient_rank, const std::vector<Vec>& generators)
    : SharpMonoid(RationalCone::from_generators(ambient_rank, generators)) {}

SharpMonoid::SharpMonoid(RationalCone cone) : cone_(std::move(cone)) {
  if (!cone_.is_pointed())
    throw Error(ErrorCode::InvalidArgument, "monoid cone is not strongly convex");
}

SharpMonoid SharpMonoid::free(std::size_t n) { return SharpMonoid(RationalCone::orthant(n)); }

bool contains(const SharpMonoid& m, std::span<const Int> x) { return m.cone().contains(x); }

bool divides(const SharpMonoid& m, std::span<const Int> a, std::span<const Int> b) {
  require_member(m, a);
  require_member(m, b);
  return contains(m, sub(b, a));
}

std::optional<Vec> smallest_element(const SharpMonoid& m, const std::vector<Vec>& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "smallest element of an empty set");
  for (const auto& x : s) require_member(m, x);
  for (const auto& x : s) {
    const bool below_all =
        std::all_of(s.begin(), s.end(), [&](const Vec& y) { return contains(m, sub(y, x)); });
    if (below_all) return x;
  }
  return std::nullopt;
}

bool is_r_close(const SharpMonoid& m, const std::vector<Vec>& s, Level r) {
  for (const auto& x : s) require_member(m, x);
  if (s.empty()) return true;
  const std::size_t zeros =
      static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](const Vec& x) { return is_zero(x); }));
  // a = 0 is forced as soon as one element is 0.
  if (zeros > 0) return zeros == s.size();
  const auto ray = common_ray(s);
  if (!ray) return false;
  return largest_admissible_scale(ray->second, r).has_value();
}

RootDecomposition root_decomposition(const SharpMonoid& m, const std::vector<Vec>& s, Level r) {
  for (const auto& x : s) require_member(m, x);
  if (std::all_of(s.begin(), s.end(), [](const Vec& x) { return is_zero(x); }))
    throw Error(ErrorCode::AllZero, "root of a set without nonzero elements");
  if (!is_r_close(m, s, r))
    throw Error(ErrorCode::NotRClose, "set is not " + r.str() + "-close");
  const auto ray = common_ray(s);
  const Int k = *largest_admissible_scale(ray->second, r);
  RootDecomposition out{scale(k, ray->first), {}};
  for (Int x : ray->second) out.multipliers.push_back(x / k);
  return out;
}

Vec root(const SharpMonoid& m, const std::vector<Vec>& s, Level r) {
  return root_decomposition(m, s, r).root;
}

bool is_weakly_r_close(const SharpMonoid& m, const std::vector<Vec>& s, Int r) {
  const auto divs = divisors(Level::finite(r).value());
  for (const auto& x : s) require_member(m, x);
  if (s.empty()) return true;
  std::vector<std::size_t> pick(s.size(), 0);
  std::vector<Vec> scaled(s.size());
  while (true) {
    for (std::size_t i = 0; i < s.size(); ++i) scaled[i] = scale(divs[pick[i]], s[i]);
    if (!smallest_element(m, scaled)) return false;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == divs.size()) pick[i++] = 0;
    if (i == pick.size()) return true;
  }
}

std::vector<Vec> hilbert_basis(const SharpMonoid& m) {
  const std::size_t n = m.ambient_rank();
  const auto& rays = m.rays();
  if (rays.empty()) return {};

  // Every irreducible element lies in the zonotope sum_i [0,1]·ray_i, hence in
  // its bounding box.
  Vec lo(n, 0), hi(n, 0);
  Int points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& r : rays) (r[j] < 0 ? lo[j] : hi[j]) += r[j];
    points = checked_mul(points, hi[j] - lo[j] + 1);
    if (points > kMaxBoxPoints)
      throw Error(ErrorCode::InvalidArgument, "Hilbert basis enumeration box is too large");
  }
  // Strictly positive grading on σ \ {0}.
  Vec grading(n, 0);
  for (const auto& f : m.cone().facets()) grading = add(grading, f);

  std::vector<std::pair<Int, Vec>> candidates;
  Vec x = lo;
  while (true) {
    if (!is_zero(x) && contains(m, x)) candidates.emplace_back(dot(grading, x), x);
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<Vec> basis;
  for (const auto& [degree, v] : candidates) {
    const bool reducible =
        std::any_of(basis.begin(), basis.end(), [&](const Vec& h) { return contains(m, sub(v, h)); });
    if (!reducible) basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

bool is_free(const SharpMonoid& m) {
  const auto basis = hilbert_basis(m);
  if (basis.size() != m.dim()) return false;
  return maximal_minor_gcd(basis, m.ambient_rank()) == 1;
}

}  // namespace richfan
