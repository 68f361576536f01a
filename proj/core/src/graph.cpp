#include "tutte/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tutte/error.hpp"

namespace tutte {

namespace {

struct UnionFind {
  explicit UnionFind(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

  unsigned find(unsigned a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  bool unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<unsigned> parent;
};

}  // namespace

Graph::Graph(unsigned vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

unsigned Graph::add_edge(unsigned u, unsigned v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    fail(ErrorKind::ElementOutOfRange, "edge endpoint " + std::to_string(std::max(u, v)) +
                                           " outside " + std::to_string(vertex_count_) + " vertices");
  }
  edges_.push_back({u, v});
  return static_cast<unsigned>(edges_.size() - 1);
}

unsigned Graph::rank(ElementSet edges) const {
  UnionFind uf(vertex_count_);
  unsigned r = 0;
  for (unsigned i : edges) {
    if (uf.unite(edges_[i].u, edges_[i].v)) ++r;
  }
  return r;
}

unsigned Graph::component_count() const {
  return vertex_count_ - rank(ElementSet::full(edge_count()));
}

namespace graphs {

Graph path(unsigned vertices) {
  Graph g(vertices);
  for (unsigned i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidParameters, "cycle needs at least one edge");
  Graph g(n);
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph multilink(unsigned n) {
  Graph g(2);
  for (unsigned i = 0; i < n; ++i) g.add_edge(0, 1);
  return g;
}

Graph complete(unsigned n) {
  Graph g(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_bipartite(unsigned a, unsigned b) {
  Graph g(a + b);
  for (unsigned i = 0; i < a; ++i) {
    for (unsigned j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

Graph grid(unsigned m, unsigned n) {
  Graph g(m * n);
  auto id = [n](unsigned r, unsigned c) { return r * n + c; };
  for (unsigned r = 0; r < m; ++r) {
    for (unsigned c = 0; c < n; ++c) {
      if (c + 1 < n) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < m) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

Graph wheel(unsigned n) {
  if (n < 3) fail(ErrorKind::InvalidParameters, "wheel needs at least three spokes");
  Graph g(n + 1);
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, n);
  return g;
}

}  // namespace graphs

}  // namespace tutte
