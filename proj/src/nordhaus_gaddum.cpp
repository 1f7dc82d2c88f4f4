#include "mgdom/error.hpp"
#include "mgdom/theorems.hpp"

namespace mgdom {

NGReport nordhaus_gaddum_audit(const Graph& g, const SolverOptions& opts) {
  const int n = g.order();
  if (n < 4) throw Error(ErrorCode::BadParameter, "the sum bounds need at least 4 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::BadParameter, "graph must be connected");
  const Graph gbar = complement(g);
  if (!is_connected(gbar))
    throw Error(ErrorCode::ComplementDisconnected, "complement of the graph is disconnected");

  NGReport r;
  r.n = n;
  r.m = g.size();
  r.is_tree = is_tree(g);
  r.value_g = gamma_tc_exact(middle_graph(g).graph(), opts).value;
  r.value_gbar = gamma_tc_exact(middle_graph(gbar).graph(), opts).value;
  r.sum = r.value_g + r.value_gbar;
  r.lower = 2 * leaves(g).size() + 2 * leaves(gbar).size();
  // n^2 + 3n is always even.
  r.upper = (n * n + 3 * n - (r.is_tree ? 8 : 4)) / 2;
  r.bounds_hold = r.lower <= r.sum && r.sum <= r.upper;
  r.tight_lower = r.sum == r.lower;
  return r;
}

}  // namespace mgdom
