#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mgdom/vertex_set.hpp"

namespace mgdom {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..order(). Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_edge(int i, int j) const;
  int degree(int v) const;
  const VertexSet& neighbors(int v) const;
  /// Edges as (i, j) with i < j, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, const std::vector<Edge>& edges);
  friend Graph build_graph_unchecked(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Validating constructor: rejects loops, out-of-range ids and repeated
/// edges (in either orientation). Requires n >= 1.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// For generators whose edge lists are correct by construction.
Graph build_graph_unchecked(int n, std::vector<Edge> edges);

Graph complement(const Graph& g);

/// Graphs with at most one vertex count as connected.
bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_of[k] is the id in the parent graph of vertex k+1.
  std::vector<int> original_of;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

VertexSet leaves(const Graph& g);

/// Longest shortest path; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

/// Eccentricity of every vertex (index v-1); nullopt when disconnected.
std::optional<std::vector<int>> eccentricities(const Graph& g);

bool is_tree(const Graph& g);

/// Permutation search with degree filtering. Intended for order <= ~10.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Relabel vertex v as perm[v-1].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace mgdom
