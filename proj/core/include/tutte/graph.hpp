#pragma once

#include <string>
#include <vector>

#include "tutte/element_set.hpp"

namespace tutte {

struct Edge {
  unsigned u = 0;
  unsigned v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph. Loops and parallel edges are allowed; edge i is element i
/// of the associated cycle matroid.
class Graph {
 public:
  Graph() = default;
  explicit Graph(unsigned vertex_count) : vertex_count_(vertex_count) {}
  Graph(unsigned vertex_count, std::vector<Edge> edges);

  unsigned vertex_count() const noexcept { return vertex_count_; }
  unsigned edge_count() const noexcept { return static_cast<unsigned>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(unsigned i) const { return edges_.at(i); }

  unsigned add_vertex() { return vertex_count_++; }
  unsigned add_edge(unsigned u, unsigned v);

  /// Rank of an edge subset in the cycle matroid: |V| minus the number of
  /// components of the spanning subgraph (V, A).
  unsigned rank(ElementSet edges) const;
  unsigned component_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  unsigned vertex_count_ = 0;
  std::vector<Edge> edges_;
};

namespace graphs {

Graph path(unsigned vertices);
Graph cycle(unsigned n);
/// Two vertices joined by n parallel edges.
Graph multilink(unsigned n);
Graph complete(unsigned n);
Graph complete_bipartite(unsigned a, unsigned b);
/// m-by-n grid of vertices with nearest-neighbour edges.
Graph grid(unsigned m, unsigned n);
/// Rim C_n plus a hub adjacent to every rim vertex; rim edges come first.
Graph wheel(unsigned n);

}  // namespace graphs

}  // namespace tutte
