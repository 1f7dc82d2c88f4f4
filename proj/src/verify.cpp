#include <deque>

#include "mgdom/domination.hpp"
#include "mgdom/error.hpp"

namespace mgdom {

namespace {

void check_universe(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.order())
    throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match graph order");
}

VertexSet undominated_by(const Graph& g, const VertexSet& d) {
  VertexSet out(g.order());
  for (int v = 1; v <= g.order(); ++v)
    if (!g.neighbors(v).intersects(d)) out.insert(v);
  return out;
}

int components_outside(const Graph& g, const VertexSet& d) {
  VertexSet seen = d;
  int count = 0;
  for (int s = 1; s <= g.order(); ++s) {
    if (seen.contains(s)) continue;
    ++count;
    std::deque<int> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      g.neighbors(v).for_each([&](int w) {
        if (!seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      });
    }
  }
  return count;
}

}  // namespace

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  check_universe(g, d);
  return undominated_by(g, d).empty();
}

bool is_outer_connected(const Graph& g, const VertexSet& d) {
  check_universe(g, d);
  return components_outside(g, d) <= 1;
}

VerificationReport verify_tocd(const Graph& g, const VertexSet& d) {
  check_universe(g, d);
  VerificationReport r;
  r.undominated = undominated_by(g, d);
  r.total_dominating = r.undominated.empty();
  r.outside_component_count = components_outside(g, d);
  r.outer_connected = r.outside_component_count <= 1;
  r.valid_tocd = r.total_dominating && r.outer_connected;
  return r;
}

VertexSet forced_members(const Graph& g, bool complement_at_least_2) {
  VertexSet out(g.order());
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    out |= g.neighbors(v);
    if (complement_at_least_2) out.insert(v);
  }
  return out;
}

VertexSet forced_members(const MiddleGraph& mg, bool complement_at_least_2) {
  const Graph& base = mg.base();
  VertexSet out(mg.graph().order());
  for (int v = 1; v <= base.order(); ++v) {
    if (base.degree(v) != 1) continue;
    const int support = base.neighbors(v).members().front();
    out.insert(mg.resolve(MiddleLabel::edge_vertex(v, support)));
    if (complement_at_least_2) out.insert(mg.resolve(MiddleLabel::original(v)));
  }
  return out;
}

}  // namespace mgdom
