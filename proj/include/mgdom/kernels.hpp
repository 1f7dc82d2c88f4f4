#pragma once

// Word-parallel inner loops of the exact solver. Graphs reaching the solver
// have at most 64 vertices, so a vertex set is one 64-bit word and the
// adjacency matrix is an array of words (bit k of adj[v] = edge v~k, 0-based).
//
// Every kernel has a portable scalar reference and an AVX2 variant; the
// variant is picked once at startup from CPUID and can be forced to scalar
// with MGDOM_KERNEL=scalar.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mgdom::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  /// Bit v set iff adj[v] & dominators == 0, for v < adj.size().
  std::uint64_t (*undominated)(const std::uint64_t* adj, int n, std::uint64_t dominators);
  /// max over v in candidates of popcount(adj[v] & targets); 0 if none.
  int (*max_gain)(const std::uint64_t* adj, int n, std::uint64_t candidates,
                  std::uint64_t targets);
};

bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();

/// Table for a specific ISA; falls back to scalar when unsupported.
const KernelTable& table_for(Isa isa);
/// Table selected for this process.
const KernelTable& active();

namespace scalar {
std::uint64_t undominated(const std::uint64_t* adj, int n, std::uint64_t dominators);
int max_gain(const std::uint64_t* adj, int n, std::uint64_t candidates, std::uint64_t targets);
}  // namespace scalar

namespace avx2 {
bool compiled();
std::uint64_t undominated(const std::uint64_t* adj, int n, std::uint64_t dominators);
int max_gain(const std::uint64_t* adj, int n, std::uint64_t candidates, std::uint64_t targets);
}  // namespace avx2

inline std::uint64_t undominated(std::span<const std::uint64_t> adj, std::uint64_t dominators) {
  return active().undominated(adj.data(), static_cast<int>(adj.size()), dominators);
}

inline int max_gain(std::span<const std::uint64_t> adj, std::uint64_t candidates,
                    std::uint64_t targets) {
  return active().max_gain(adj.data(), static_cast<int>(adj.size()), candidates, targets);
}

}  // namespace mgdom::kernels
