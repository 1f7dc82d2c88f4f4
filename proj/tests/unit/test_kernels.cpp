#include <doctest.h>

#include <random>

#include "mgdom/kernels.hpp"

using namespace mgdom::kernels;

namespace {

std::vector<std::uint64_t> random_rows(int n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
  return adj;
}

std::uint64_t low_bits(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

TEST_CASE("scalar reference on a hand example") {
  // Path 0-1-2-3.
  const std::vector<std::uint64_t> adj{0b0010, 0b0101, 0b1010, 0b0100};
  CHECK(scalar::undominated(adj.data(), 4, 0b0010) == 0b1010);
  CHECK(scalar::undominated(adj.data(), 4, 0b0110) == 0);
  CHECK(scalar::max_gain(adj.data(), 4, 0b1111, 0b1111) == 2);
  CHECK(scalar::max_gain(adj.data(), 4, 0b1001, 0b1111) == 1);
  CHECK(scalar::max_gain(adj.data(), 4, 0, 0b1111) == 0);
}

TEST_CASE("every supported ISA matches the scalar reference") {
  std::mt19937_64 rng(2024);
  const auto isas = supported_isas();
  CHECK(isas.front() == Isa::Scalar);
  for (const Isa isa : isas) {
    CAPTURE(to_string(isa));
    const KernelTable& table = table_for(isa);
    CHECK(table.isa == isa);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 64);
      const auto adj = random_rows(n, rng, 0.05 + 0.5 * (trial % 7) / 7.0);
      const std::uint64_t dom = rng() & rng() & low_bits(n);
      const std::uint64_t cand = rng() & low_bits(n);
      const std::uint64_t targets = rng() & low_bits(n);
      CHECK(table.undominated(adj.data(), n, dom) == scalar::undominated(adj.data(), n, dom));
      CHECK(table.max_gain(adj.data(), n, cand, targets) ==
            scalar::max_gain(adj.data(), n, cand, targets));
    }
  }
}

TEST_CASE("avx2 path is exercised when the CPU has it") {
  if (!isa_supported(Isa::Avx2)) return;
  CHECK(avx2::compiled());
  std::mt19937_64 rng(5);
  for (int n : {1, 3, 4, 5, 8, 63, 64}) {
    const auto adj = random_rows(n, rng, 0.4);
    for (int t = 0; t < 200; ++t) {
      const std::uint64_t d = rng() & low_bits(n);
      CHECK(avx2::undominated(adj.data(), n, d) == scalar::undominated(adj.data(), n, d));
      CHECK(avx2::max_gain(adj.data(), n, d, ~d & low_bits(n)) ==
            scalar::max_gain(adj.data(), n, d, ~d & low_bits(n)));
    }
  }
}
