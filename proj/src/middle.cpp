#include "mgdom/middle.hpp"

#include <charconv>

#include "mgdom/error.hpp"

namespace mgdom {

MiddleLabel MiddleLabel::edge_vertex(int a, int b) {
  if (a > b) std::swap(a, b);
  return {Kind::EdgeVertex, a, b};
}

std::string to_string(const MiddleLabel& label) {
  if (label.is_original()) return "v" + std::to_string(label.i);
  return "m" + std::to_string(label.i) + "_" + std::to_string(label.j);
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) return std::nullopt;
  return value;
}

}  // namespace

std::optional<MiddleLabel> parse_label(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  if (text[0] == 'v') {
    auto v = parse_int(text.substr(1));
    if (!v) return std::nullopt;
    return MiddleLabel::original(*v);
  }
  if (text[0] == 'm') {
    const auto sep = text.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    auto a = parse_int(text.substr(1, sep - 1));
    auto b = parse_int(text.substr(sep + 1));
    if (!a || !b || *a == *b) return std::nullopt;
    return MiddleLabel::edge_vertex(*a, *b);
  }
  return std::nullopt;
}

const MiddleLabel& MiddleGraph::label(int id) const {
  if (id < 1 || id > static_cast<int>(labels_.size()))
    throw Error(ErrorCode::IndexOutOfRange, "middle vertex " + std::to_string(id) + " not present");
  return labels_[id - 1];
}

std::optional<int> MiddleGraph::find(const MiddleLabel& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int MiddleGraph::resolve(const MiddleLabel& label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorCode::UnknownLabel, "no vertex " + to_string(label) + " in the middle graph");
}

std::vector<std::string> MiddleGraph::format(const VertexSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](int id) { out.push_back(to_string(label(id))); });
  return out;
}

MiddleGraph middle_graph(const Graph& g) {
  MiddleGraph mg;
  mg.base_ = g;
  const int n = g.order();
  const auto& base_edges = g.edges();  // already lexicographic
  const int order = n + static_cast<int>(base_edges.size());

  mg.labels_.reserve(static_cast<std::size_t>(order));
  for (int v = 1; v <= n; ++v) mg.labels_.push_back(MiddleLabel::original(v));
  for (auto [i, j] : base_edges) mg.labels_.push_back(MiddleLabel::edge_vertex(i, j));
  for (int id = 1; id <= order; ++id) mg.ids_.emplace(mg.labels_[id - 1], id);

  // Edge-vertices incident to each original, in id order.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n) + 1);
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    const int id = n + 1 + static_cast<int>(e);
    incident[base_edges[e].first].push_back(id);
    incident[base_edges[e].second].push_back(id);
  }

  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) {
    const auto& inc = incident[v];
    for (std::size_t a = 0; a < inc.size(); ++a) {
      edges.emplace_back(v, inc[a]);
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so the
  // line-graph pairs above are already distinct.
  mg.graph_ = build_graph_unchecked(order, std::move(edges));
  return mg;
}

}  // namespace mgdom
