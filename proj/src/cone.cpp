#include "richfan/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <random>
#include <set>

#include "richfan/error.hpp"
#include "richfan/parallel.hpp"

namespace richfan {

namespace {

struct VRep {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

void check_lengths(const std::vector<Vec>& vs, std::size_t n, const char* what) {
  for (const auto& v : vs)
    if (v.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + " of length " + std::to_string(v.size()) +
                      " in ambient rank " + std::to_string(n));
}

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Double description: extremal rays and lineality of
// {x : <a,x> >= 0 (a in ineqs), <b,x> = 0 (b in eqs)}.
// The equations are eliminated by passing to a lattice basis of their common
// kernel; inequalities are then inserted one at a time. Adjacency uses the
// combinatorial test on zero sets.
VRep double_description(std::size_t n, const std::vector<Vec>& ineqs, const std::vector<Vec>& eqs) {
  const std::vector<Vec> basis = integer_kernel(eqs, n);
  const std::size_t d = basis.size();

  std::vector<Vec> cons;
  cons.reserve(ineqs.size());
  for (const auto& a : ineqs) {
    Vec t(d);
    for (std::size_t j = 0; j < d; ++j) t[j] = dot(a, basis[j]);
    if (!is_zero(t)) cons.push_back(primitive(t));
  }
  // Drop repeats but keep the caller's order: it steers intermediate sizes.
  {
    std::set<Vec> seen;
    std::erase_if(cons, [&](const Vec& v) { return !seen.insert(v).second; });
  }

  struct Ray {
    Vec v;
    boost::dynamic_bitset<> zero;
  };
  std::vector<Vec> lin;
  for (std::size_t j = 0; j < d; ++j) lin.push_back(unit_vector(d, j));
  std::vector<Ray> rays;
  const std::size_t m = cons.size();

  for (std::size_t k = 0; k < m; ++k) {
    const Vec& a = cons[k];
    auto lit = std::find_if(lin.begin(), lin.end(), [&](const Vec& l) { return dot(a, l) != 0; });
    if (lit != lin.end()) {
      Vec l = *lit;
      lin.erase(lit);
      Int al = dot(a, l);
      if (al < 0) {
        l = scale(-1, l);
        al = -al;
      }
      for (auto& other : lin) {
        const Int ao = dot(a, other);
        if (ao != 0) other = primitive(combine(al, other, -ao, l));
      }
      for (auto& ray : rays) {
        const Int ar = dot(a, ray.v);
        if (ar != 0) ray.v = primitive(combine(al, ray.v, -ar, l));
        ray.zero.set(k);
      }
      Ray fresh{l, boost::dynamic_bitset<>(m)};
      for (std::size_t i = 0; i < k; ++i) fresh.zero.set(i);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Int> val(rays.size());
    bool any_negative = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      any_negative |= val[i] < 0;
    }
    if (!any_negative) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zero.set(k);
      continue;
    }

    const std::size_t pointed_dim = d - lin.size();
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      next.push_back(rays[i]);
      if (val[i] == 0) next.back().zero.set(k);
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && common.is_subset_of(rays[t].zero)) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{primitive(combine(val[p], rays[q].v, -val[q], rays[p].v)), common};
        fresh.zero.set(k);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  auto lift = [&](const Vec& t) {
    Vec x(n, 0);
    for (std::size_t j = 0; j < d; ++j)
      if (t[j] != 0) x = combine(1, x, t[j], basis[j]);
    return x;
  };
  VRep out;
  for (const auto& r : rays) out.rays.push_back(lift(r.v));
  for (const auto& l : lin) out.lineality.push_back(lift(l));
  return out;
}

// Canonical (rays, lineality) for the cone generated by `rays` + span(`lin`),
// assuming `rays` are already extremal modulo the lineality.
VRep canonical(std::size_t n, const VRep& v) {
  VRep out;
  out.lineality = v.lineality.empty() ? std::vector<Vec>{} : saturated_span(v.lineality, n);
  for (const auto& r : v.rays) {
    Vec c = out.lineality.empty() ? primitive(r) : project_out(r, out.lineality);
    if (!is_zero(c)) out.rays.push_back(std::move(c));
  }
  sort_unique(out.rays);
  return out;
}

}  // namespace

RationalCone::RationalCone(std::size_t n) : n_(n) {
  for (std::size_t i = 0; i < n; ++i) equations_.push_back(unit_vector(n, i));
}

RationalCone RationalCone::from_generators(std::size_t n, const std::vector<Vec>& generators,
                                           const std::vector<Vec>& lineality_generators) {
  check_lengths(generators, n, "generator");
  check_lengths(lineality_generators, n, "lineality generator");
  // Facets of the cone are the extremal rays of its dual.
  const VRep h = canonical(n, double_description(n, generators, lineality_generators));
  const VRep v = canonical(n, double_description(n, h.rays, h.lineality));
  RationalCone c(n);
  c.rays_ = v.rays;
  c.lineality_ = v.lineality;
  c.facets_ = h.rays;
  c.equations_ = h.lineality;
  return c;
}

RationalCone RationalCone::from_inequalities(std::size_t n, const std::vector<Vec>& inequalities,
                                             const std::vector<Vec>& equations) {
  check_lengths(inequalities, n, "inequality");
  check_lengths(equations, n, "equation");
  const VRep v = canonical(n, double_description(n, inequalities, equations));
  const VRep h = canonical(n, double_description(n, v.rays, v.lineality));
  RationalCone c(n);
  c.rays_ = v.rays;
  c.lineality_ = v.lineality;
  c.facets_ = h.rays;
  c.equations_ = h.lineality;
  return c;
}

RationalCone RationalCone::orthant(std::size_t n) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
  return from_generators(n, units);
}

bool RationalCone::contains(std::span<const Int> x) const {
  if (x.size() != n_)
    throw Error(ErrorCode::DimensionMismatch,
                "point of length " + std::to_string(x.size()) + " in rank " + std::to_string(n_));
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "cone ranks differ");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(scale(-1, l))) return false;
  return true;
}

bool RationalCone::contains_in_relative_interior(std::span<const Int> x) const {
  if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "point length differs from rank");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

RationalCone RationalCone::face(std::span<const Int> normal) const {
  std::vector<Vec> tight;
  for (const auto& r : rays_)
    if (dot(normal, r) == 0) tight.push_back(r);
  return from_generators(n_, tight, lineality_);
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "cone ranks differ");
  std::vector<Vec> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  std::vector<Vec> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(n_, ineqs, eqs);
}

std::strong_ordering operator<=>(const RationalCone& a, const RationalCone& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.rays_ <=> b.rays_; c != 0) return c;
  return a.lineality_ <=> b.lineality_;
}

RationalCone dual_cone(const RationalCone& cone) {
  return RationalCone::from_inequalities(cone.ambient_rank(), cone.rays(), cone.lineality());
}

bool is_unimodular(const RationalCone& cone) {
  if (!cone.is_full_dimensional() || !cone.is_simplicial()) return false;
  const Int det = determinant(cone.rays());
  return det == 1 || det == -1;
}

Fan::Fan(std::size_t n, std::vector<RationalCone> cones) : n_(n), cones_(std::move(cones)) {
  for (const auto& c : cones_)
    if (c.ambient_rank() != n_)
      throw Error(ErrorCode::DimensionMismatch,
                  "cone of rank " + std::to_string(c.ambient_rank()) + " in fan of rank " +
                      std::to_string(n_));
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

bool is_complete_on_orthant(const Fan& fan) {
  const std::size_t n = fan.ambient_rank();
  if (fan.cones().empty()) return false;
  for (const auto& c : fan.cones()) {
    if (!c.is_full_dimensional() || !c.is_pointed())
      throw Error(ErrorCode::MalformedFan, "maximal cone is not full-dimensional and pointed");
    for (const auto& r : c.rays())
      if (std::any_of(r.begin(), r.end(), [](Int x) { return x < 0; }))
        throw Error(ErrorCode::MalformedFan, "cone leaves the orthant: ray " + to_string(r));
  }
  if (n == 0) return true;

  std::map<std::vector<Vec>, int> interior_facets;
  for (const auto& c : fan.cones()) {
    for (const auto& f : c.facets()) {
      const bool on_boundary =
          std::count(f.begin(), f.end(), 0) == static_cast<std::ptrdiff_t>(n - 1) &&
          std::count(f.begin(), f.end(), 1) == 1;
      if (on_boundary) continue;
      std::vector<Vec> tight;
      for (const auto& r : c.rays())
        if (dot(f, r) == 0) tight.push_back(r);
      ++interior_facets[tight];
    }
  }
  for (const auto& [face, count] : interior_facets)
    if (count != 2) return false;

  // Sanity layer: interior points must each be covered.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Int> coord(1, 997);
  for (int s = 0; s < 64; ++s) {
    Vec p(n);
    for (auto& x : p) x = coord(rng);
    const bool covered = std::any_of(fan.cones().begin(), fan.cones().end(),
                                     [&](const RationalCone& c) { return c.contains(p); });
    if (!covered) return false;
  }
  return true;
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "fans of ranks " + std::to_string(a.ambient_rank()) +
                                                  " and " + std::to_string(b.ambient_rank()));
  const std::size_t nb = b.size();
  auto pieces = parallel_map<std::optional<RationalCone>>(a.size() * nb, [&](std::size_t idx) {
    RationalCone c = a.cones()[idx / nb].intersect(b.cones()[idx % nb]);
    return c.is_full_dimensional() ? std::optional<RationalCone>(std::move(c)) : std::nullopt;
  });
  std::vector<RationalCone> cones;
  for (auto& p : pieces)
    if (p) cones.push_back(std::move(*p));
  return Fan(a.ambient_rank(), std::move(cones));
}

Fan restrict_to_coordinate_face(const Fan& fan, const std::vector<std::size_t>& coords) {
  const std::size_t n = fan.ambient_rank();
  std::vector<bool> dropped(n, false);
  for (std::size_t i : coords) {
    if (i >= n)
      throw Error(ErrorCode::UnknownCoordinate,
                  "coordinate " + std::to_string(i) + " in rank " + std::to_string(n));
    dropped[i] = true;
  }
  const std::size_t kept = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), false));
  auto drop = [&](const Vec& v) {
    Vec out;
    out.reserve(kept);
    for (std::size_t i = 0; i < n; ++i)
      if (!dropped[i]) out.push_back(v[i]);
    return out;
  };
  std::vector<Vec> hyperplanes;
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) hyperplanes.push_back(unit_vector(n, i));

  std::vector<RationalCone> cones;
  for (const auto& c : fan.cones()) {
    std::vector<Vec> eqs = c.equations();
    eqs.insert(eqs.end(), hyperplanes.begin(), hyperplanes.end());
    const RationalCone slice = RationalCone::from_inequalities(n, c.facets(), eqs);
    std::vector<Vec> rays, lin;
    for (const auto& r : slice.rays()) rays.push_back(drop(r));
    for (const auto& l : slice.lineality()) lin.push_back(drop(l));
    RationalCone restricted = RationalCone::from_generators(kept, rays, lin);
    if (restricted.is_full_dimensional()) cones.push_back(std::move(restricted));
  }
  return Fan(kept, std::move(cones));
}

}  // namespace richfan
