#include "richfan/tropical.hpp"

#include <algorithm>
#include <set>

#include "richfan/error.hpp"

namespace richfan {

namespace {

bool in_dual(const RationalCone& sigma, std::span<const Int> y) {
  for (const auto& r : sigma.rays())
    if (dot(y, r) < 0) return false;
  for (const auto& l : sigma.lineality())
    if (dot(y, l) != 0) return false;
  return true;
}

}  // namespace

TropicalCurve::TropicalCurve(TropicalGraph graph, SharpMonoid monoid, std::vector<Vec> lengths)
    : graph_(std::move(graph)), monoid_(std::move(monoid)), lengths_(std::move(lengths)) {
  if (!graph_.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "curve graph is not connected");
  if (lengths_.size() != graph_.edge_count())
    throw Error(ErrorCode::ShapeMismatch, "one length per edge is required");
  for (std::size_t e = 0; e < lengths_.size(); ++e) {
    const auto& id = graph_.edge(e).id;
    if (lengths_[e].size() != monoid_.ambient_rank())
      throw Error(ErrorCode::ShapeMismatch, "length of '" + id + "' has the wrong rank");
    if (!contains(monoid_, lengths_[e]))
      throw Error(ErrorCode::NotAMember, "length of '" + id + "' is not in the monoid");
    if (is_zero(lengths_[e]))
      throw Error(ErrorCode::NotAMember, "length of '" + id + "' is zero; contract the edge instead");
  }
}

std::vector<Vec> TropicalCurve::lengths_of(const EdgeSet& edges) const {
  std::vector<Vec> out;
  for (std::size_t e : edges) out.push_back(lengths_.at(e));
  return out;
}

RealFamily::RealFamily(TropicalGraph graph, RationalCone parameter_cone, std::vector<Vec> length_map)
    : graph_(std::move(graph)), cone_(std::move(parameter_cone)), length_map_(std::move(length_map)) {
  if (!graph_.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "family graph is not connected");
  if (length_map_.size() != graph_.edge_count())
    throw Error(ErrorCode::ShapeMismatch, "one length functional per edge is required");
  for (std::size_t e = 0; e < length_map_.size(); ++e) {
    if (length_map_[e].size() != cone_.ambient_rank())
      throw Error(ErrorCode::ShapeMismatch, "length functional has the wrong rank");
    if (!in_dual(cone_, length_map_[e]))
      throw Error(ErrorCode::InvalidArgument,
                  "length of '" + graph_.edge(e).id + "' is negative somewhere on the parameter cone");
  }
}

bool is_r_rich(const TropicalCurve& c, Level r) {
  for (const auto& cut : enumerate_cuts(c.graph()))
    if (!is_r_close(c.monoid(), c.lengths_of(cut), r)) return false;
  return true;
}

bool is_r_rich_by_components(const TropicalCurve& c, Level r) {
  for (const auto& block : circuit_components(c.graph()))
    if (!is_r_close(c.monoid(), c.lengths_of(block), r)) return false;
  return true;
}

bool is_weakly_r_rich(const TropicalCurve& c, Int r) {
  for (const auto& cut : enumerate_cuts(c.graph()))
    if (!is_weakly_r_close(c.monoid(), c.lengths_of(cut), r)) return false;
  return true;
}

PLFunction pl_witness(const TropicalCurve& c, const Cut& cut, Int r) {
  const Level level = Level::finite(r);
  const auto& g = c.graph();
  const auto side = cut_sides(g, cut);
  const auto decomposition = root_decomposition(c.monoid(), c.lengths_of(cut), level);

  PLFunction f;
  const Vec high = scale(r, decomposition.root);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    f.vertex_values.push_back(side[v] == 0 ? Vec(c.monoid().ambient_rank(), 0) : high);
  f.slopes.assign(g.edge_count(), 0);
  for (std::size_t i = 0; i < cut.size(); ++i) {
    const Edge& e = g.edge(cut[i]);
    const Int slope = r / decomposition.multipliers[i];
    const std::size_t low_vertex = std::min(e.tail, e.head);
    f.slopes[cut[i]] = side[low_vertex] == 0 ? slope : -slope;
  }
  return f;
}

bool check_pl(const TropicalCurve& c, const PLFunction& f, const Cut& cut, Int r) {
  const auto& g = c.graph();
  const std::size_t n = c.monoid().ambient_rank();
  if (f.vertex_values.size() != g.vertex_count() || f.slopes.size() != g.edge_count())
    throw Error(ErrorCode::ShapeMismatch, "PL function does not match the graph");
  for (const auto& v : f.vertex_values)
    if (v.size() != n) throw Error(ErrorCode::ShapeMismatch, "PL value has the wrong rank");
  std::vector<bool> in_cut(g.edge_count(), false);
  for (std::size_t e : cut) {
    if (e >= g.edge_count()) throw Error(ErrorCode::ShapeMismatch, "cut edge out of range");
    in_cut[e] = true;
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const std::size_t lo = std::min(e.tail, e.head);
    const std::size_t hi = std::max(e.tail, e.head);
    const Int slope = f.slopes[i];
    if (sub(f.vertex_values[hi], f.vertex_values[lo]) != scale(slope, c.length(i))) return false;
    if (in_cut[i]) {
      if (slope == 0 || r % (slope < 0 ? -slope : slope) != 0) return false;
    } else if (slope != 0) {
      return false;
    }
  }
  return true;
}

RealFamily to_real_family(const TropicalCurve& c) {
  return RealFamily(c.graph(), dual_cone(c.monoid().cone()), c.lengths());
}

bool family_is_weakly_r_rich(const RealFamily& f, Int r) {
  const auto divs = divisors(Level::finite(r).value());
  const auto& rows = f.length_map();
  for (const auto& cut : enumerate_cuts(f.graph())) {
    std::vector<std::size_t> pick(cut.size(), 0);
    std::vector<Vec> scaled(cut.size());
    while (true) {
      for (std::size_t i = 0; i < cut.size(); ++i) scaled[i] = scale(divs[pick[i]], rows[cut[i]]);
      const bool has_min = std::any_of(scaled.begin(), scaled.end(), [&](const Vec& low) {
        return std::all_of(scaled.begin(), scaled.end(),
                           [&](const Vec& other) { return in_dual(f.parameter_cone(), sub(other, low)); });
      });
      if (!has_min) return false;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == divs.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return true;
}

std::vector<Vec> face_quotient_map(const SharpMonoid& m, const std::vector<Vec>& face_rays) {
  const std::size_t n = m.ambient_rank();
  std::set<Vec> wanted;
  for (const auto& r : face_rays) {
    if (r.size() != n) throw Error(ErrorCode::NotAFace, "face ray has the wrong rank");
    const Vec p = primitive(r);
    if (std::find(m.rays().begin(), m.rays().end(), p) == m.rays().end())
      throw Error(ErrorCode::NotAFace, to_string(r) + " is not a ray of the monoid");
    wanted.insert(p);
  }
  // Smallest face containing the given rays: rays tight on every facet that
  // is tight on all of them.
  std::vector<Vec> tight_facets;
  for (const auto& f : m.cone().facets())
    if (std::all_of(wanted.begin(), wanted.end(), [&](const Vec& r) { return dot(f, r) == 0; }))
      tight_facets.push_back(f);
  std::set<Vec> in_face;
  for (const auto& r : m.rays())
    if (std::all_of(tight_facets.begin(), tight_facets.end(), [&](const Vec& f) { return dot(f, r) == 0; }))
      in_face.insert(r);
  if (in_face != wanted) throw Error(ErrorCode::NotAFace, "rays do not span a face of the monoid cone");
  return integer_kernel(std::vector<Vec>(wanted.begin(), wanted.end()), n);
}

TropicalCurve specialize(const TropicalCurve& c, const std::vector<Vec>& face_rays) {
  const auto quotient = face_quotient_map(c.monoid(), face_rays);
  auto project = [&](const Vec& x) {
    Vec y(quotient.size());
    for (std::size_t i = 0; i < quotient.size(); ++i) y[i] = dot(quotient[i], x);
    return y;
  };
  std::vector<Vec> generators;
  for (const auto& r : c.monoid().rays()) generators.push_back(project(r));
  SharpMonoid image(quotient.size(), generators);

  EdgeSet dead;
  std::vector<Vec> lengths;
  for (std::size_t e = 0; e < c.graph().edge_count(); ++e) {
    Vec y = project(c.length(e));
    if (is_zero(y))
      dead.push_back(e);
    else
      lengths.push_back(std::move(y));
  }
  return TropicalCurve(contract(c.graph(), dead), std::move(image), std::move(lengths));
}

BasicModel basic_model(const TropicalCurve& c, Level r) {
  if (!is_r_rich(c, r)) throw Error(ErrorCode::NotRRich, "curve is not " + r.str() + "-rich");
  const auto& g = c.graph();
  auto components = circuit_components(g);
  std::vector<Int> multipliers(g.edge_count(), 0);
  std::vector<Vec> roots;
  std::vector<Vec> model_lengths(g.edge_count());
  for (std::size_t t = 0; t < components.size(); ++t) {
    const auto decomposition = root_decomposition(c.monoid(), c.lengths_of(components[t]), r);
    roots.push_back(decomposition.root);
    for (std::size_t i = 0; i < components[t].size(); ++i) {
      const std::size_t e = components[t][i];
      multipliers[e] = decomposition.multipliers[i];
      model_lengths[e] = scale(multipliers[e], unit_vector(components.size(), t));
    }
  }

  // N^T → M is an isomorphism iff the roots are distinct, there are rank-many
  // of them, and they are exactly the Hilbert basis.
  std::vector<Vec> sorted_roots = roots;
  std::sort(sorted_roots.begin(), sorted_roots.end());
  const bool distinct = std::adjacent_find(sorted_roots.begin(), sorted_roots.end()) == sorted_roots.end();
  const bool is_basic = distinct && roots.size() == c.monoid().dim() &&
                        sorted_roots == hilbert_basis(c.monoid());

  TropicalCurve model(g, SharpMonoid::free(components.size()), std::move(model_lengths));
  return BasicModel{std::move(components), std::move(multipliers), std::move(roots), is_basic,
                    std::move(model)};
}

std::size_t enriched_parameter_dimension(const TropicalCurve& c, Int r) {
  if (!is_r_rich(c, Level::finite(r)))
    throw Error(ErrorCode::NotRRich, "curve is not " + std::to_string(r) + "-rich");
  return c.graph().edge_count() - circuit_components(c.graph()).size();
}

}  // namespace richfan
