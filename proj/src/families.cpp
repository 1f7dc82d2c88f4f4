#include "mgdom/families.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "mgdom/error.hpp"

namespace mgdom {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::Path, "path", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Complete, "complete", 1},
    {Family::Wheel, "wheel", 1},
    {Family::CompleteBipartite, "complete-bipartite", 2},
    {Family::Star, "star", 1},
    {Family::DoubleStar, "double-star", 2},
    {Family::Diam4Tree, "diam4-tree", 1},
    {Family::Spider, "spider", 1},
    {Family::Friendship, "friendship", 1},
    {Family::RandomTree, "random-tree", 1},
    {Family::RandomConnected, "random-connected", 2},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw Error(ErrorCode::BadParameter, "unknown family");
}

[[noreturn]] void bad(const FamilySpec& spec, std::string_view why) {
  throw Error(ErrorCode::BadParameter, to_string(spec) + ": " + std::string(why));
}

Graph from_edges(int n, std::vector<Edge> edges) { return build_graph_unchecked(n, std::move(edges)); }

Graph random_tree(int n, std::uint64_t seed) {
  if (n == 1) return Graph(1);
  if (n == 2) return from_edges(2, {{1, 2}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (auto& x : pruefer) x = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int x : pruefer) ++degree[x];
  std::vector<Edge> edges;
  for (int x : pruefer) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = 0;
  int w = 0;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) (u == 0 ? u : w) = v;
  }
  edges.emplace_back(u, w);
  return from_edges(n, std::move(edges));
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  std::vector<Edge> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<Edge> chosen;
    chosen.reserve(static_cast<std::size_t>(m));
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), m, rng);
    Graph g = from_edges(n, std::move(chosen));
    if (is_connected(g)) return g;
  }
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& i : kFamilies)
    if (i.name == name) return i.family;
  return std::nullopt;
}

int family_arity(Family f) { return info(f).arity; }

bool is_random_family(Family f) {
  return f == Family::RandomTree || f == Family::RandomConnected;
}

std::string params_string(const FamilySpec& spec) {
  std::string out = std::to_string(spec.first);
  if (family_arity(spec.family) == 2) out += "," + std::to_string(spec.second);
  if (is_random_family(spec.family)) out += ";seed=" + std::to_string(spec.seed);
  return out;
}

std::string to_string(const FamilySpec& spec) {
  return std::string(family_name(spec.family)) + "(" + params_string(spec) + ")";
}

void validate(const FamilySpec& spec) {
  const int a = spec.first;
  const int b = spec.second;
  switch (spec.family) {
    case Family::Path:
    case Family::Complete:
    case Family::Spider:
    case Family::Friendship:
    case Family::RandomTree:
      if (a < 1) bad(spec, "parameter must be at least 1");
      break;
    case Family::Cycle:
      if (a < 3) bad(spec, "cycles need at least 3 vertices");
      break;
    case Family::Wheel:
      if (a < 4) bad(spec, "wheels need at least 4 vertices (hub plus a 3-cycle)");
      break;
    case Family::CompleteBipartite:
    case Family::DoubleStar:
      if (a < 1 || b < 1) bad(spec, "both parameters must be at least 1");
      break;
    case Family::Star:
      if (a < 2) bad(spec, "stars need at least 2 vertices");
      break;
    case Family::Diam4Tree:
      if (a < 6) bad(spec, "needs at least 6 vertices");
      break;
    case Family::RandomConnected:
      if (a < 1) bad(spec, "parameter must be at least 1");
      if (b < a - 1 || static_cast<long>(b) > static_cast<long>(a) * (a - 1) / 2)
        throw Error(ErrorCode::Infeasible,
                    to_string(spec) + ": no connected graph with that many edges");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const int a = spec.first;
  const int b = spec.second;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      for (int i = 1; i < a; ++i) edges.emplace_back(i, i + 1);
      return from_edges(a, std::move(edges));
    case Family::Cycle:
      for (int i = 1; i < a; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, a);
      return from_edges(a, std::move(edges));
    case Family::Complete:
      for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j) edges.emplace_back(i, j);
      return from_edges(a, std::move(edges));
    case Family::Wheel:
      for (int r = 2; r <= a; ++r) edges.emplace_back(1, r);
      for (int r = 2; r < a; ++r) edges.emplace_back(r, r + 1);
      edges.emplace_back(2, a);
      return from_edges(a, std::move(edges));
    case Family::CompleteBipartite:
      for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) edges.emplace_back(i, a + j);
      return from_edges(a + b, std::move(edges));
    case Family::Star:
      for (int r = 2; r <= a; ++r) edges.emplace_back(1, r);
      return from_edges(a, std::move(edges));
    case Family::DoubleStar: {
      const int n = a + b + 2;
      for (int i = 1; i <= a; ++i) edges.emplace_back(i, n - 1);
      for (int i = a + 1; i <= a + b; ++i) edges.emplace_back(i, n);
      edges.emplace_back(n - 1, n);
      return from_edges(n, std::move(edges));
    }
    case Family::Diam4Tree:
      for (int i = 1; i < 5; ++i) edges.emplace_back(i, i + 1);
      for (int i = 6; i <= a; ++i) edges.emplace_back(3, i);
      return from_edges(a, std::move(edges));
    case Family::Spider:
      for (int i = 1; i <= a; ++i) {
        edges.emplace_back(1, 1 + i);
        edges.emplace_back(1 + i, 1 + a + i);
      }
      return from_edges(2 * a + 1, std::move(edges));
    case Family::Friendship:
      for (int t = 1; t <= a; ++t) {
        edges.emplace_back(1, 2 * t);
        edges.emplace_back(1, 2 * t + 1);
        edges.emplace_back(2 * t, 2 * t + 1);
      }
      return from_edges(2 * a + 1, std::move(edges));
    case Family::RandomTree:
      return random_tree(a, spec.seed);
    case Family::RandomConnected:
      return random_connected(a, b, spec.seed);
  }
  bad(spec, "unknown family");
}

Graph corona_k1(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + i);
  return from_edges(2 * n, std::move(edges));
}

Graph corona_p2(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, 2 * n + i);
  }
  return from_edges(3 * n, std::move(edges));
}

}  // namespace mgdom
