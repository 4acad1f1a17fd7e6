#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace richfan {

struct Edge {
  std::string id;
  std::size_t tail;  // vertex index
  std::size_t head;  // vertex index
  bool is_loop() const { return tail == head; }
};

/// Sorted list of edge indices.
using EdgeSet = std::vector<std::size_t>;
/// A cut is stored as the sorted indices of its edges.
using Cut = EdgeSet;

/// Finite multigraph with labelled edges; loops and parallel edges allowed.
/// Vertex and edge order is the insertion order and is what every index in
/// the library refers to.
class TropicalGraph {
 public:
  struct EdgeSpec {
    std::string id;
    std::string a;
    std::string b;
  };

  /// Throws MalformedInput on duplicate ids, unknown endpoints or an empty
  /// vertex list. Connectivity is not required here; operations that need
  /// it raise DisconnectedGraph.
  TropicalGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Throws UnknownEdge.
  std::size_t edge_index(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;
  EdgeSet edge_indices(const std::vector<std::string>& ids) const;
  std::vector<std::string> edge_ids(const EdgeSet& edges) const;

  bool is_connected() const;

  friend bool operator==(const TropicalGraph& a, const TropicalGraph& b);

 private:
  TropicalGraph() = default;
  friend TropicalGraph contract(const TropicalGraph&, const EdgeSet&);

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// All cuts, in lexicographic order of their sorted edge-index lists.
/// Throws DisconnectedGraph.
std::vector<Cut> enumerate_cuts(const TropicalGraph& g);

/// Side assignment of the two components of g minus the cut: 0 for the side
/// holding vertex 0, 1 for the other. Throws InvalidArgument if `cut` is
/// not a cut.
std::vector<int> cut_sides(const TropicalGraph& g, const Cut& cut);

/// Maximal circuit-connected classes (biconnected blocks; bridges and loops
/// are singletons), each sorted, ordered by smallest edge index.
/// Throws DisconnectedGraph.
std::vector<EdgeSet> circuit_components(const TropicalGraph& g);

/// Identify the endpoints of every edge in `s` and delete those edges. A
/// merged vertex keeps the id of its first member. Throws UnknownEdge.
TropicalGraph contract(const TropicalGraph& g, const EdgeSet& s);

/// Every circuit-connected component is a singleton. Throws DisconnectedGraph.
bool is_tree_with_loops(const TropicalGraph& g);

}  // namespace richfan
