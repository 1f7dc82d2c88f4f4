#pragma once

#include <string>
#include <string_view>

#include "mgdom/graph.hpp"
#include "mgdom/middle.hpp"

namespace mgdom {

/// Header "n m", then m lines "i j". Lines whose first non-blank character
/// is '#' and blank lines are skipped. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Canonical form: header, then edges sorted with i < j.
std::string emit_edge_list(const Graph& g);

std::string emit_dot(const Graph& g);
/// Originals drawn as circles, edge-vertices as squares.
std::string emit_dot(const MiddleGraph& mg);

}  // namespace mgdom
