#include <cstdint>
#include <vector>

#include "mgdom/domination.hpp"
#include "mgdom/error.hpp"

namespace mgdom {

bool has_hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw Error(ErrorCode::TooLarge, "spanning path search is limited to 24 vertices");
  if (n <= 1) return true;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : g.edges()) {
    adj[i - 1] |= 1U << (j - 1);
    adj[j - 1] |= 1U << (i - 1);
  }
  // ends[mask]: vertices at which some simple path covering exactly `mask` ends.
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[1U << v] = 1U << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t tails = ends[mask];
    while (tails != 0) {
      const int v = __builtin_ctz(tails);
      tails &= tails - 1;
      std::uint32_t next = adj[v] & ~mask;
      while (next != 0) {
        const int w = __builtin_ctz(next);
        next &= next - 1;
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return ends[full] != 0;
}

}  // namespace mgdom
