#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgdom/graph.hpp"

namespace mgdom {

struct MiddleLabel {
  enum class Kind { Original, EdgeVertex };

  Kind kind = Kind::Original;
  int i = 0;
  int j = 0;  // 0 for originals

  static MiddleLabel original(int v) { return {Kind::Original, v, 0}; }
  /// Endpoints are stored sorted.
  static MiddleLabel edge_vertex(int a, int b);

  bool is_original() const noexcept { return kind == Kind::Original; }

  friend bool operator==(const MiddleLabel&, const MiddleLabel&) = default;
  friend auto operator<=>(const MiddleLabel&, const MiddleLabel&) = default;
};

/// "v3" or "m2_5".
std::string to_string(const MiddleLabel& label);
std::optional<MiddleLabel> parse_label(std::string_view text);

/// M(G) materialized as a plain Graph. Ids 1..n are the originals, ids
/// n+1..n+m are edge-vertices in lexicographic order of their endpoints.
class MiddleGraph {
 public:
  const Graph& base() const noexcept { return base_; }
  const Graph& graph() const noexcept { return graph_; }
  const MiddleLabel& label(int id) const;
  const std::vector<MiddleLabel>& labels() const noexcept { return labels_; }

  /// Throws UnknownLabel.
  int resolve(const MiddleLabel& label) const;
  std::optional<int> find(const MiddleLabel& label) const;

  std::vector<std::string> format(const VertexSet& s) const;

 private:
  friend MiddleGraph middle_graph(const Graph& g);

  Graph base_;
  Graph graph_;
  std::vector<MiddleLabel> labels_;
  std::map<MiddleLabel, int> ids_;
};

MiddleGraph middle_graph(const Graph& g);

inline int resolve(const MiddleGraph& mg, const MiddleLabel& label) {
  return mg.resolve(label);
}

}  // namespace mgdom
