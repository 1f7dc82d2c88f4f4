// AVX2 variants. Functions carry target attributes instead of the whole TU
// being built with -mavx2, so nothing here leaks AVX2 code into inline
// functions shared with the scalar path. Callers go through dispatch.cpp,
// which only hands these out after a CPUID check.

#include "mgdom/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define MGDOM_HAVE_AVX2 1
#include <immintrin.h>
#else
#define MGDOM_HAVE_AVX2 0
#endif

namespace mgdom::kernels::avx2 {

#if MGDOM_HAVE_AVX2

bool compiled() { return true; }

__attribute__((target("avx2"))) std::uint64_t undominated(const std::uint64_t* adj, int n,
                                                          std::uint64_t dominators) {
  const __m256i dom = _mm256_set1_epi64x(static_cast<long long>(dominators));
  const __m256i zero = _mm256_setzero_si256();
  std::uint64_t out = 0;
  int v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256i rows = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(adj + v));
    const __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(rows, dom), zero);
    const auto lanes = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(hit)));
    out |= static_cast<std::uint64_t>(lanes) << v;
  }
  for (; v < n; ++v)
    if ((adj[v] & dominators) == 0) out |= std::uint64_t{1} << v;
  return out;
}

namespace {

// Per-lane 64-bit popcount: nibble lookup then byte sums.
__attribute__((target("avx2"))) inline __m256i popcount_epi64(__m256i x) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

__attribute__((target("avx2"))) int max_gain(const std::uint64_t* adj, int n,
                                             std::uint64_t candidates, std::uint64_t targets) {
  const __m256i tgt = _mm256_set1_epi64x(static_cast<long long>(targets));
  __m256i best = _mm256_setzero_si256();
  int v = 0;
  for (; v + 4 <= n; v += 4) {
    const unsigned sel = static_cast<unsigned>(candidates >> v) & 0xFU;
    if (sel == 0) continue;
    const __m256i keep = _mm256_set_epi64x(-static_cast<long long>((sel >> 3) & 1U),
                                           -static_cast<long long>((sel >> 2) & 1U),
                                           -static_cast<long long>((sel >> 1) & 1U),
                                           -static_cast<long long>(sel & 1U));
    const __m256i rows = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(adj + v));
    const __m256i counts = _mm256_and_si256(popcount_epi64(_mm256_and_si256(rows, tgt)), keep);
    // Counts are <= 64, so 32-bit lane max is exact.
    best = _mm256_max_epi32(best, counts);
  }
  alignas(32) long long lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  long long result = lanes[0];
  for (int k = 1; k < 4; ++k)
    if (lanes[k] > result) result = lanes[k];
  for (; v < n; ++v) {
    if (((candidates >> v) & 1U) == 0) continue;
    const long long gain = __builtin_popcountll(adj[v] & targets);
    if (gain > result) result = gain;
  }
  return static_cast<int>(result);
}

#else

bool compiled() { return false; }

std::uint64_t undominated(const std::uint64_t* adj, int n, std::uint64_t dominators) {
  return scalar::undominated(adj, n, dominators);
}

int max_gain(const std::uint64_t* adj, int n, std::uint64_t candidates, std::uint64_t targets) {
  return scalar::max_gain(adj, n, candidates, targets);
}

#endif

}  // namespace mgdom::kernels::avx2
