#include "richfan/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "richfan/error.hpp"

namespace richfan {

namespace {

constexpr std::size_t kMaxCutVertices = 24;

void require_connected(const TropicalGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

TropicalGraph::TropicalGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::MalformedInput, "graph needs at least one vertex");
  std::unordered_set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw Error(ErrorCode::MalformedInput, "duplicate vertex id");
  std::unordered_set<std::string> edge_seen;
  for (const auto& e : edges) {
    if (!edge_seen.insert(e.id).second)
      throw Error(ErrorCode::MalformedInput, "duplicate edge id '" + e.id + "'");
    edges_.push_back(Edge{e.id, vertex_index(e.a), vertex_index(e.b)});
  }
}

std::size_t TropicalGraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  throw Error(ErrorCode::UnknownEdge, "no edge '" + id + "'");
}

std::size_t TropicalGraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  throw Error(ErrorCode::MalformedInput, "no vertex '" + id + "'");
}

EdgeSet TropicalGraph::edge_indices(const std::vector<std::string>& ids) const {
  EdgeSet out;
  for (const auto& id : ids) out.push_back(edge_index(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> TropicalGraph::edge_ids(const EdgeSet& edges) const {
  std::vector<std::string> out;
  for (std::size_t e : edges) out.push_back(edges_.at(e).id);
  return out;
}

bool TropicalGraph::is_connected() const {
  UnionFind uf(vertices_.size());
  for (const auto& e : edges_) uf.unite(e.tail, e.head);
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (uf.find(v) != 0) return false;
  return true;
}

bool operator==(const TropicalGraph& a, const TropicalGraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || std::minmax(x.tail, x.head) != std::minmax(y.tail, y.head)) return false;
  }
  return true;
}

std::vector<Cut> enumerate_cuts(const TropicalGraph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  if (n > kMaxCutVertices)
    throw Error(ErrorCode::InvalidArgument,
                "cut enumeration is limited to " + std::to_string(kMaxCutVertices) + " vertices");
  std::vector<Cut> cuts;
  if (n < 2) return cuts;

  // Each cut corresponds to exactly one bipartition (S, V \ S) with both
  // sides connected; fix vertex 0 in S to visit each once.
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    UnionFind uf(n);
    Cut cut;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      const bool a = (mask >> e.tail) & 1u;
      const bool b = (mask >> e.head) & 1u;
      if (a == b)
        uf.unite(e.tail, e.head);
      else
        cut.push_back(i);
    }
    std::size_t roots = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (uf.find(v) == v) ++roots;
    if (roots == 2) cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

std::vector<int> cut_sides(const TropicalGraph& g, const Cut& cut) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_cut(g.edge_count(), false);
  for (std::size_t e : cut) in_cut.at(e) = true;
  UnionFind uf(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!in_cut[i]) uf.unite(g.edge(i).tail, g.edge(i).head);
  std::vector<int> side(n);
  std::size_t other = n;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = uf.find(v);
    if (root == 0) {
      side[v] = 0;
    } else {
      if (other == n) other = root;
      if (root != other) throw Error(ErrorCode::InvalidArgument, "edge set leaves more than two components");
      side[v] = 1;
    }
  }
  if (other == n) throw Error(ErrorCode::InvalidArgument, "edge set does not disconnect the graph");
  for (std::size_t e : cut)
    if (side[g.edge(e).tail] == side[g.edge(e).head])
      throw Error(ErrorCode::InvalidArgument, "cut edge does not join the two sides");
  return side;
}

std::vector<EdgeSet> circuit_components(const TropicalGraph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (edge, neighbour)
  std::vector<EdgeSet> blocks;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.is_loop()) {
      blocks.push_back({i});
      continue;
    }
    adj[e.tail].push_back({i, e.head});
    adj[e.head].push_back({i, e.tail});
  }

  // Tarjan's biconnected blocks on the multigraph: skip only the tree edge
  // itself so that a parallel edge back to the parent counts as a back edge.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kNone), low(n, 0);
  std::vector<std::size_t> stack;
  std::size_t clock = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t via) {
    disc[u] = low[u] = clock++;
    for (auto [e, w] : adj[u]) {
      if (e == via) continue;
      if (disc[w] == kNone) {
        stack.push_back(e);
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          EdgeSet block;
          while (true) {
            const std::size_t top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, kNone);

  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

TropicalGraph contract(const TropicalGraph& g, const EdgeSet& s) {
  std::vector<bool> contracted(g.edge_count(), false);
  for (std::size_t e : s) {
    if (e >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(e));
    contracted[e] = true;
  }
  UnionFind uf(g.vertex_count());
  for (std::size_t e : s) uf.unite(g.edge(e).tail, g.edge(e).head);

  TropicalGraph out;
  std::vector<std::size_t> new_index(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (uf.find(v) == v) {
      new_index[v] = out.vertices_.size();
      out.vertices_.push_back(g.vertices()[v]);
    }
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (contracted[i]) continue;
    const Edge& e = g.edge(i);
    out.edges_.push_back(Edge{e.id, new_index[uf.find(e.tail)], new_index[uf.find(e.head)]});
  }
  return out;
}

bool is_tree_with_loops(const TropicalGraph& g) {
  const auto blocks = circuit_components(g);
  return std::all_of(blocks.begin(), blocks.end(), [](const EdgeSet& b) { return b.size() == 1; });
}

}  // namespace richfan
