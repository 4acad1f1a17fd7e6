#include "richfan/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "richfan/error.hpp"

namespace richfan {

namespace {

using Point = std::pair<Int, Int>;  // (x1, x2) of a point scaled to x1+x2+x3 = L

Int coordinate_sum(const Vec& v) { return v[0] + v[1] + v[2]; }

Int cross(Point o, Point a, Point b) {
  const __int128 v = static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
                     static_cast<__int128>(a.second - o.second) * (b.first - o.first);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

__int128 along(Point o, Point d, Point x) {
  return static_cast<__int128>(x.first - o.first) * (d.first - o.first) +
         static_cast<__int128>(x.second - o.second) * (d.second - o.second);
}

// Vertices on a common scale so that segment tests stay in integers.
std::vector<Point> scaled_points(const std::vector<Vec>& vertices) {
  Int l = 1;
  for (const auto& v : vertices) l = checked_mul(l / std::gcd(l, coordinate_sum(v)), coordinate_sum(v));
  std::vector<Point> pts;
  for (const auto& v : vertices) {
    const Int k = l / coordinate_sum(v);
    pts.emplace_back(checked_mul(k, v[0]), checked_mul(k, v[1]));
  }
  return pts;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

CrossSection cross_section(const Fan& fan) {
  if (fan.ambient_rank() != 3)
    throw Error(ErrorCode::RankNotThree, "cross sections need rank 3, got " + std::to_string(fan.ambient_rank()));
  CrossSection cs;
  std::map<Vec, std::size_t> index;
  for (const auto& cone : fan.cones()) {
    if (!cone.is_full_dimensional() || !cone.is_pointed())
      throw Error(ErrorCode::MalformedFan, "maximal cone is not pointed and full-dimensional");
    for (const auto& r : cone.rays())
      if (std::any_of(r.begin(), r.end(), [](Int x) { return x < 0; }))
        throw Error(ErrorCode::MalformedFan, "ray " + to_string(r) + " leaves the orthant");
    for (const auto& r : cone.rays()) index.emplace(r, 0);
  }
  for (auto& [ray, i] : index) {
    i = cs.vertices.size();
    cs.vertices.push_back(ray);
  }
  for (const auto& cone : fan.cones()) {
    // Each facet of a pointed 3-dimensional cone holds exactly two rays,
    // which are neighbours on the polygon.
    std::map<std::size_t, std::vector<std::size_t>> nbrs;
    for (const auto& f : cone.facets()) {
      std::vector<std::size_t> tight;
      for (const auto& r : cone.rays())
        if (dot(f, r) == 0) tight.push_back(index.at(r));
      if (tight.size() != 2) throw Error(ErrorCode::MalformedFan, "facet does not meet exactly two rays");
      nbrs[tight[0]].push_back(tight[1]);
      nbrs[tight[1]].push_back(tight[0]);
    }
    std::vector<std::size_t> cycle{nbrs.begin()->first};
    std::size_t prev = cycle.front();
    std::size_t cur = std::min(nbrs.begin()->second[0], nbrs.begin()->second[1]);
    while (cur != cycle.front()) {
      cycle.push_back(cur);
      const auto& nb = nbrs.at(cur);
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    cs.regions.push_back(std::move(cycle));
  }
  return cs;
}

std::vector<std::pair<std::size_t, std::size_t>> region_adjacency(const CrossSection& cs) {
  const auto pts = scaled_points(cs.vertices);
  auto segments = [&](const std::vector<std::size_t>& region) {
    std::vector<std::pair<Point, Point>> out;
    for (std::size_t i = 0; i < region.size(); ++i)
      out.emplace_back(pts[region[i]], pts[region[(i + 1) % region.size()]]);
    return out;
  };
  auto overlap = [](std::pair<Point, Point> s, std::pair<Point, Point> t) {
    const auto [a, b] = s;
    if (cross(a, b, t.first) != 0 || cross(a, b, t.second) != 0) return false;
    const __int128 lo = std::max<__int128>(0, std::min(along(a, b, t.first), along(a, b, t.second)));
    const __int128 hi = std::min(along(a, b, b), std::max(along(a, b, t.first), along(a, b, t.second)));
    return lo < hi;
  };
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t i = 0; i < cs.regions.size(); ++i) {
    const auto si = segments(cs.regions[i]);
    for (std::size_t j = i + 1; j < cs.regions.size(); ++j) {
      const auto sj = segments(cs.regions[j]);
      bool found = false;
      for (const auto& s : si)
        for (const auto& t : sj) found = found || overlap(s, t);
      if (found) adj.emplace_back(i, j);
    }
  }
  return adj;
}

std::vector<std::pair<std::size_t, std::size_t>> cone_adjacency(const Fan& fan) {
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  const auto& cones = fan.cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (cones[i].intersect(cones[j]).dim() + 1 == fan.ambient_rank()) adj.emplace_back(i, j);
  return adj;
}

std::string render_svg(const CrossSection& cs) {
  constexpr double top[2] = {200, 27}, left[2] = {27, 327}, right[2] = {373, 327};
  std::vector<std::pair<double, double>> xy;
  for (const auto& v : cs.vertices) {
    const double s = static_cast<double>(coordinate_sum(v));
    const double a = v[0] / s, b = v[1] / s, c = v[2] / s;
    xy.emplace_back(a * top[0] + b * left[0] + c * right[0], a * top[1] + b * left[1] + c * right[1]);
  }
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"360\" viewBox=\"0 0 400 360\">\n";
  out += "  <g fill=\"#e8eef7\" stroke=\"#1f2d3d\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
  for (const auto& region : cs.regions) {
    out += "    <polygon points=\"";
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (i) out += ' ';
      out += fixed(xy[region[i]].first) + ',' + fixed(xy[region[i]].second);
    }
    out += "\"/>\n";
  }
  out += "  </g>\n  <g fill=\"#1f2d3d\">\n";
  for (const auto& [x, y] : xy) out += "    <circle cx=\"" + fixed(x) + "\" cy=\"" + fixed(y) + "\" r=\"3\"/>\n";
  out += "  </g>\n  <g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  out += "    <text x=\"200\" y=\"17\">x1</text>\n";
  out += "    <text x=\"15\" y=\"345\">x2</text>\n";
  out += "    <text x=\"385\" y=\"345\">x3</text>\n";
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace richfan
