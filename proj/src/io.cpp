#include "richfan/io.hpp"

#include "richfan/error.hpp"

namespace richfan::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed("expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

Vec vec_from(const json& j) {
  if (!j.is_array()) malformed("expected an integer array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) malformed("expected an integer array");
    v.push_back(x.get<Int>());
  }
  return v;
}

std::vector<Vec> vecs_from(const json& j) {
  if (!j.is_array()) malformed("expected an array of integer arrays");
  std::vector<Vec> out;
  for (const auto& x : j) out.push_back(vec_from(x));
  return out;
}

std::size_t rank_from(const json& j) {
  if (!j.is_number_integer() || j.get<Int>() < 0) malformed("rank must be a nonnegative integer");
  return j.get<std::size_t>();
}

void check_lengths(const std::vector<Vec>& vs, std::size_t n) {
  for (const auto& v : vs)
    if (v.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "vector " + to_string(v) + " does not have length " + std::to_string(n));
}

std::string string_from(const json& j) {
  if (!j.is_string()) malformed("expected a string");
  return j.get<std::string>();
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

TropicalGraph graph_from_json(const json& j) {
  std::vector<std::string> vertices;
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) malformed("'vertices' must be an array");
  for (const auto& v : vs) vertices.push_back(string_from(v));
  std::vector<TropicalGraph::EdgeSpec> edges;
  const json& es = field(j, "edges");
  if (!es.is_array()) malformed("'edges' must be an array");
  for (const auto& e : es) {
    const json& ends = field(e, "ends");
    if (!ends.is_array() || ends.size() != 2) malformed("'ends' must list two vertices");
    edges.push_back({string_from(field(e, "id")), string_from(ends[0]), string_from(ends[1])});
  }
  return TropicalGraph(std::move(vertices), edges);
}

json to_json(const TropicalGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id}, {"ends", {g.vertices()[e.tail], g.vertices()[e.head]}}});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

SharpMonoid monoid_from_json(const json& j) {
  const std::size_t n = rank_from(field(j, "rank"));
  auto rays = vecs_from(field(j, "rays"));
  check_lengths(rays, n);
  return SharpMonoid(n, rays);
}

json to_json(const SharpMonoid& m) { return {{"rank", m.ambient_rank()}, {"rays", m.rays()}}; }

TropicalCurve curve_from_json(const json& j) {
  TropicalGraph g = graph_from_json(j);
  SharpMonoid m = monoid_from_json(field(j, "monoid"));
  const json& ls = field(j, "lengths");
  if (!ls.is_object()) malformed("'lengths' must map edge ids to vectors");
  std::vector<Vec> lengths(g.edge_count());
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto& [id, v] : ls.items()) {
    const std::size_t e = g.edge_index(id);
    lengths[e] = vec_from(v);
    seen[e] = true;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!seen[e]) throw Error(ErrorCode::ShapeMismatch, "no length for edge '" + g.edge(e).id + "'");
  check_lengths(lengths, m.ambient_rank());
  return TropicalCurve(std::move(g), std::move(m), std::move(lengths));
}

json to_json(const TropicalCurve& c) {
  json j = to_json(c.graph());
  j["monoid"] = to_json(c.monoid());
  json ls = json::object();
  for (std::size_t e = 0; e < c.graph().edge_count(); ++e) ls[c.graph().edge(e).id] = c.length(e);
  j["lengths"] = ls;
  return j;
}

RealFamily family_from_json(const json& j) {
  TropicalGraph g = graph_from_json(j);
  auto rays = vecs_from(field(j, "sigma_rays"));
  std::vector<Vec> lineality;
  if (j.contains("sigma_lineality")) lineality = vecs_from(j["sigma_lineality"]);
  auto rows = vecs_from(field(j, "length_map"));
  std::size_t m = 0;
  if (j.contains("sigma_rank"))
    m = rank_from(j["sigma_rank"]);
  else if (!rows.empty())
    m = rows.front().size();
  else if (!rays.empty())
    m = rays.front().size();
  check_lengths(rays, m);
  check_lengths(lineality, m);
  check_lengths(rows, m);
  return RealFamily(std::move(g), RationalCone::from_generators(m, rays, lineality), std::move(rows));
}

json to_json(const RealFamily& f) {
  json j = to_json(f.graph());
  j["sigma_rank"] = f.parameter_cone().ambient_rank();
  j["sigma_rays"] = f.parameter_cone().rays();
  if (!f.parameter_cone().is_pointed()) j["sigma_lineality"] = f.parameter_cone().lineality();
  j["length_map"] = f.length_map();
  return j;
}

Fan fan_from_json(const json& j) {
  const std::size_t n = rank_from(field(j, "rank"));
  const json& cs = field(j, "cones");
  if (!cs.is_array()) malformed("'cones' must be an array");
  std::vector<RationalCone> cones;
  for (const auto& c : cs) {
    auto rays = vecs_from(field(c, "rays"));
    check_lengths(rays, n);
    cones.push_back(RationalCone::from_generators(n, rays));
  }
  return Fan(n, std::move(cones));
}

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.cones()) cones.push_back({{"rays", c.rays()}});
  return {{"rank", f.ambient_rank()}, {"cones", cones}};
}

MonomialIdeal ideal_from_json(const json& j) {
  const std::size_t n = rank_from(field(j, "rank"));
  return MonomialIdeal(n, vecs_from(field(j, "generators")));
}

json to_json(const MonomialIdeal& i) { return {{"rank", i.rank()}, {"generators", i.generators()}}; }

CutOrder cut_order_from_json(const json& j, const TropicalGraph& g) {
  CutOrder o;
  const json& minima = field(j, "minima");
  if (!minima.is_array()) malformed("'minima' must be an array");
  for (const auto& id : minima) o.minima.push_back(g.edge_index(string_from(id)));
  std::sort(o.minima.begin(), o.minima.end());
  const json& pred = field(j, "pred");
  if (!pred.is_object()) malformed("'pred' must be an object");
  for (const auto& [id, p] : pred.items()) o.pred[g.edge_index(id)] = g.edge_index(string_from(p));
  return o;
}

json to_json(const CutOrder& o, const TropicalGraph& g) {
  json pred = json::object();
  for (const auto& [e, p] : o.pred) pred[g.edge(e).id] = g.edge(p).id;
  return {{"minima", g.edge_ids(o.minima)}, {"pred", pred}};
}

json to_json(const CrossSection& cs) { return {{"vertices", cs.vertices}, {"regions", cs.regions}}; }

}  // namespace richfan::io
