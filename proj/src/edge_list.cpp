#include "mgdom/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mgdom/error.hpp"

namespace mgdom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_count(std::string_view tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": expected an integer, got '" +
                    std::string(tok) + "'",
                line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long, long>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    last_line = line_no;
    if (tokens.size() != 2)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected two integers", line_no);
    const long a = parse_count(tokens[0], line_no);
    const long b = parse_count(tokens[1], line_no);

    if (!header) {
      if (a < 1) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                                        ": vertex count must be at least 1",
                             line_no);
      if (b < 0) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                                        ": edge count must be non-negative",
                             line_no);
      header = {a, b};
      continue;
    }
    const long n = header->first;
    if (static_cast<long>(edges.size()) == header->second)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": more edges than the header declares",
                  line_no);
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex outside 1.." + std::to_string(n),
                  line_no);
    if (a == b)
      throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line_no) + ": loop edge",
                  line_no);
    const Edge e{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
    if (!seen.insert(e).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "line " + std::to_string(line_no) + ": duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing 'n m' header line", 1);
  if (static_cast<long>(edges.size()) != header->second)
    throw Error(ErrorCode::ParseError,
                "expected " + std::to_string(header->second) + " edges, found " +
                    std::to_string(edges.size()),
                last_line);
  return build_graph(static_cast<int>(header->first), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [i, j] : g.edges()) os << i << ' ' << j << '\n';
  return os.str();
}

std::string emit_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_dot(const MiddleGraph& mg) {
  std::ostringstream os;
  const Graph& g = mg.graph();
  os << "graph M {\n";
  for (int v = 1; v <= g.order(); ++v) {
    const auto& label = mg.label(v);
    os << "  " << v << " [label=\"" << to_string(label) << "\", shape="
       << (label.is_original() ? "circle" : "square") << "];\n";
  }
  for (auto [i, j] : g.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mgdom
