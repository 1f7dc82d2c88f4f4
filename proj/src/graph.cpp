#include "mgdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "mgdom/error.hpp"

namespace mgdom {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative order");
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return adjacency_[i - 1].contains(j);
}

int Graph::degree(int v) const { return neighbors(v).size(); }

const VertexSet& Graph::neighbors(int v) const {
  if (v < 1 || v > n_)
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
  return adjacency_[v - 1];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int v = 1; v <= n_; ++v) out.push_back(degree(v));
  return out;
}

Graph build_graph_unchecked(int n, std::vector<Edge> edges) {
  Graph g(n);
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    g.adjacency_[i - 1].insert(j);
    g.adjacency_[j - 1].insert(i);
  }
  std::sort(edges.begin(), edges.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "graph order must be at least 1");
  std::set<Edge> seen;
  for (auto [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") outside 1.." +
                                                  std::to_string(n));
    if (i == j) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(i));
    if (!seen.insert(std::minmax(i, j)).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return build_graph_unchecked(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return build_graph_unchecked(g.order(), std::move(edges));
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()) + 1, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    g.neighbors(v).for_each([&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 1);
  return std::all_of(dist.begin() + 1, dist.end(), [](int d) { return d >= 0; });
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match graph order");
  InducedSubgraph out;
  out.original_of = s.members();
  std::vector<int> index_of(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t k = 0; k < out.original_of.size(); ++k)
    index_of[out.original_of[k]] = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges())
    if (index_of[i] != 0 && index_of[j] != 0) edges.emplace_back(index_of[i], index_of[j]);
  out.graph = build_graph_unchecked(static_cast<int>(out.original_of.size()), std::move(edges));
  return out;
}

VertexSet leaves(const Graph& g) {
  VertexSet out(g.order());
  for (int v = 1; v <= g.order(); ++v)
    if (g.degree(v) == 1) out.insert(v);
  return out;
}

std::optional<std::vector<int>> eccentricities(const Graph& g) {
  std::vector<int> ecc;
  for (int v = 1; v <= g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    int worst = 0;
    for (int w = 1; w <= g.order(); ++w) {
      if (dist[w] < 0) return std::nullopt;
      worst = std::max(worst, dist[w]);
    }
    ecc.push_back(worst);
  }
  return ecc;
}

std::optional<int> diameter(const Graph& g) {
  const auto ecc = eccentricities(g);
  if (!ecc) return std::nullopt;
  return ecc->empty() ? 0 : *std::max_element(ecc->begin(), ecc->end());
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw Error(ErrorCode::BadParameter, "permutation length does not match graph order");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [i, j] : g.edges()) edges.emplace_back(perm[i - 1], perm[j - 1]);
  return build_graph(g.order(), edges);
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
  if (v > a.order()) return true;
  for (int w = 1; w <= b.order(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 1; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], w);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_isomorphism(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(static_cast<std::size_t>(a.order()) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(b.order()) + 1, false);
  return extend_isomorphism(a, b, map, used, 1);
}

}  // namespace mgdom
