#include <cstdlib>
#include <string_view>

#include "mgdom/kernels.hpp"

namespace mgdom::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::undominated, &scalar::max_gain};
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::undominated, &avx2::max_gain};

const KernelTable& select() {
  if (const char* forced = std::getenv("MGDOM_KERNEL")) {
    if (std::string_view(forced) == "scalar") return kScalar;
  }
  return isa_supported(Isa::Avx2) ? kAvx2 : kScalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (isa_supported(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

const KernelTable& table_for(Isa isa) {
  if (isa == Isa::Avx2 && isa_supported(Isa::Avx2)) return kAvx2;
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace mgdom::kernels
