#pragma once

// Shared helpers for the test binaries: graph builders, exhaustive and
// random graph generators, and brute-force oracles that do not reuse the
// library's own algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "richfan/arith.hpp"
#include "richfan/graph.hpp"
#include "richfan/monoid.hpp"

namespace support {

using richfan::Int;
using richfan::TropicalGraph;
using richfan::Vec;

using EdgeList = std::vector<std::pair<int, int>>;

inline TropicalGraph make_graph(int vertices, const EdgeList& edges) {
  std::vector<std::string> vs;
  for (int v = 0; v < vertices; ++v) vs.push_back("v" + std::to_string(v));
  std::vector<TropicalGraph::EdgeSpec> es;
  for (std::size_t i = 0; i < edges.size(); ++i)
    es.push_back({"e" + std::to_string(i + 1), vs[edges[i].first], vs[edges[i].second]});
  return TropicalGraph(vs, es);
}

inline TropicalGraph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline TropicalGraph two_gon() { return make_graph(2, {{0, 1}, {0, 1}}); }
inline TropicalGraph theta() { return make_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

struct SmallGraph {
  int vertices;
  EdgeList edges;
};

namespace detail {

inline EdgeList normalised(EdgeList edges) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Minimum relabelled edge list over vertex orders that sort vertices by
// degree; equal forms mean isomorphic graphs.
inline EdgeList canonical_form(const SmallGraph& g) {
  std::vector<int> degree(g.vertices, 0);
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> order(g.vertices);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return degree[x] < degree[y]; });
  EdgeList best;
  bool have = false;
  // Permute inside blocks of equal degree only.
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (start == order.size()) {
      std::vector<int> label(g.vertices);
      for (int i = 0; i < g.vertices; ++i) label[order[i]] = i;
      EdgeList e;
      for (auto [a, b] : g.edges) e.emplace_back(label[a], label[b]);
      e = normalised(e);
      if (!have || e < best) {
        best = e;
        have = true;
      }
      return;
    }
    std::size_t end = start;
    while (end < order.size() && degree[order[end]] == degree[order[start]]) ++end;
    std::sort(order.begin() + start, order.begin() + end);
    do {
      rec(end);
    } while (std::next_permutation(order.begin() + start, order.begin() + end));
  };
  rec(0);
  return best;
}

}  // namespace detail

/// Connected multigraphs (loops and parallel edges allowed) with at most
/// max_edges edges, one per isomorphism class, in order of edge count.
inline std::vector<SmallGraph> connected_graphs(std::size_t max_edges) {
  std::vector<SmallGraph> all{{1, {}}};
  std::vector<SmallGraph> level{{1, {}}};
  for (std::size_t m = 1; m <= max_edges; ++m) {
    std::map<std::pair<int, EdgeList>, SmallGraph> next;
    for (const auto& g : level) {
      std::vector<SmallGraph> children;
      for (int a = 0; a < g.vertices; ++a) {
        for (int b = a; b < g.vertices; ++b) {
          SmallGraph c = g;
          c.edges.emplace_back(a, b);
          children.push_back(c);
        }
        SmallGraph c = g;
        c.edges.emplace_back(a, g.vertices);
        ++c.vertices;
        children.push_back(c);
      }
      for (auto& c : children) next.emplace(std::make_pair(c.vertices, detail::canonical_form(c)), c);
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(SmallGraph{key.first, key.second});
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

/// Random connected multigraph with the given number of edges: a random
/// spanning tree on some vertices, then random extra edges (loops allowed).
inline SmallGraph random_connected(std::mt19937_64& rng, std::size_t edges) {
  std::uniform_int_distribution<int> vcount(1, static_cast<int>(edges) + 1);
  const int n = vcount(rng);
  SmallGraph g{n, {}};
  for (int v = 1; v < n; ++v) g.edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.edges.size() < edges) g.edges.emplace_back(pick(rng), pick(rng));
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

inline TropicalGraph build(const SmallGraph& g) { return make_graph(g.vertices, g.edges); }

/// Connected components of the vertex set using only edges in `mask`.
inline std::vector<int> component_labels(const TropicalGraph& g, unsigned mask) {
  std::vector<int> label(g.vertex_count());
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!(mask >> e & 1u)) continue;
      int& a = label[g.edge(e).tail];
      int& b = label[g.edge(e).head];
      if (a != b) {
        a = b = std::min(a, b);
        changed = true;
      }
    }
  }
  return label;
}

inline std::size_t count_labels(const std::vector<int>& label) {
  return std::set<int>(label.begin(), label.end()).size();
}

/// Cuts straight from the definition: removing c leaves exactly two
/// components and every edge of c joins them.
inline std::vector<richfan::Cut> brute_force_cuts(const TropicalGraph& g) {
  const std::size_t m = g.edge_count();
  const unsigned all = (1u << m) - 1;
  std::vector<richfan::Cut> out;
  for (unsigned c = 1; c <= all && m > 0; ++c) {
    const auto label = component_labels(g, all & ~c);
    if (count_labels(label) != 2) continue;
    bool across = true;
    richfan::Cut cut;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(c >> e & 1u)) continue;
      cut.push_back(e);
      if (label[g.edge(e).tail] == label[g.edge(e).head]) across = false;
    }
    if (across) out.push_back(cut);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Edge masks of the simple cycles: a single loop, or a loop-free connected
/// edge set in which every touched vertex has degree two.
inline std::vector<unsigned> simple_cycles(const TropicalGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<unsigned> out;
  for (unsigned s = 1; s < (1u << m); ++s) {
    std::vector<int> degree(g.vertex_count(), 0);
    bool has_loop = false;
    int size = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(s >> e & 1u)) continue;
      ++size;
      has_loop = has_loop || g.edge(e).is_loop();
      ++degree[g.edge(e).tail];
      ++degree[g.edge(e).head];
    }
    if (has_loop) {
      if (size == 1) out.push_back(s);
      continue;
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 0 && d != 2; })) continue;
    const auto label = component_labels(g, s);
    std::set<int> touched;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (degree[v]) touched.insert(label[v]);
    if (touched.size() == 1) out.push_back(s);
  }
  return out;
}

/// Classes of the closure of "lie on a common simple cycle"; edges on no
/// cycle are singletons.
inline std::vector<richfan::EdgeSet> brute_force_components(const TropicalGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> cls(m);
  std::iota(cls.begin(), cls.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
  for (unsigned c : simple_cycles(g)) {
    std::size_t first = m;
    for (std::size_t e = 0; e < m; ++e)
      if (c >> e & 1u) {
        if (first == m)
          first = e;
        else
          cls[find(e)] = find(first);
      }
  }
  std::map<std::size_t, richfan::EdgeSet> groups;
  for (std::size_t e = 0; e < m; ++e) groups[find(e)].push_back(e);
  std::vector<richfan::EdgeSet> out;
  for (auto& [k, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Int> trial_divisors(Int r) {
  std::vector<Int> out;
  for (Int k = 1; k <= r; ++k)
    if (r % k == 0) out.push_back(k);
  return out;
}

/// Calls fn on every tuple of the given length with entries from `values`.
template <typename Fn>
void for_each_tuple(const std::vector<Int>& values, std::size_t length, Fn fn) {
  std::vector<std::size_t> idx(length, 0);
  std::vector<Int> tuple(length);
  while (true) {
    for (std::size_t i = 0; i < length; ++i) tuple[i] = values[idx[i]];
    fn(tuple);
    std::size_t i = 0;
    while (i < length && ++idx[i] == values.size()) idx[i++] = 0;
    if (i == length) return;
  }
}

/// b − a lies in the monoid.
inline bool monoid_le(const richfan::SharpMonoid& m, const Vec& a, const Vec& b) {
  return richfan::contains(m, richfan::sub(b, a));
}

/// Finite-r closeness by trying a = s_i / λ_i for every divisor tuple.
inline bool r_close_oracle(const richfan::SharpMonoid& m, const std::vector<Vec>& s, Int r) {
  bool found = false;
  for_each_tuple(trial_divisors(r), s.size(), [&](const std::vector<Int>& lambda) {
    if (found) return;
    std::vector<Vec> quotients;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Vec q;
      for (Int x : s[i]) {
        if (x % lambda[i] != 0) return;
        q.push_back(x / lambda[i]);
      }
      quotients.push_back(q);
    }
    for (const auto& q : quotients)
      if (q != quotients.front()) return;
    found = richfan::contains(m, quotients.front());
  });
  return found;
}

/// ∞-closeness: some a dividing s_0 with every s_i a positive multiple of a.
inline bool infinity_close_oracle(const richfan::SharpMonoid& m, const std::vector<Vec>& s) {
  if (std::all_of(s.begin(), s.end(), [](const Vec& v) { return richfan::is_zero(v); })) return true;
  Int c = 0;
  for (Int x : s.front()) c = std::gcd(c, x);
  if (c == 0) return false;
  for (Int k = 1; k <= c; ++k) {
    if (c % k) continue;
    Vec a;
    for (Int x : s.front()) a.push_back(x / k);
    bool ok = richfan::contains(m, a);
    for (const auto& v : s) {
      Int lambda = 0;
      for (std::size_t i = 0; i < a.size() && ok; ++i)
        if (a[i] != 0) lambda = v[i] / a[i];
      ok = ok && lambda >= 1 && richfan::scale(lambda, a) == v;
    }
    if (ok) return true;
  }
  return false;
}

/// Some rescaled element lies below all the others, for every divisor tuple.
inline bool weakly_close_oracle(const richfan::SharpMonoid& m, const std::vector<Vec>& s, Int r) {
  bool all = true;
  for_each_tuple(trial_divisors(r), s.size(), [&](const std::vector<Int>& lambda) {
    std::vector<Vec> scaled;
    for (std::size_t i = 0; i < s.size(); ++i) scaled.push_back(richfan::scale(lambda[i], s[i]));
    bool some = false;
    for (const auto& x : scaled)
      some = some || std::all_of(scaled.begin(), scaled.end(), [&](const Vec& y) { return monoid_le(m, x, y); });
    all = all && some;
  });
  return all;
}

}  // namespace support
