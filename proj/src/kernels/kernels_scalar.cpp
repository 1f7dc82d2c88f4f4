#include <bit>

#include "mgdom/kernels.hpp"

namespace mgdom::kernels::scalar {

std::uint64_t undominated(const std::uint64_t* adj, int n, std::uint64_t dominators) {
  std::uint64_t out = 0;
  for (int v = 0; v < n; ++v)
    if ((adj[v] & dominators) == 0) out |= std::uint64_t{1} << v;
  return out;
}

int max_gain(const std::uint64_t* adj, int n, std::uint64_t candidates, std::uint64_t targets) {
  int best = 0;
  for (int v = 0; v < n; ++v) {
    if (((candidates >> v) & 1U) == 0) continue;
    const int gain = std::popcount(adj[v] & targets);
    if (gain > best) best = gain;
  }
  return best;
}

}  // namespace mgdom::kernels::scalar
