#include <cstdlib>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk::simd {

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(QWALK_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernel_table(Isa isa) {
  if (!isa_supported(isa))
    throw InvalidInput("kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
#if defined(QWALK_HAVE_AVX2)
  if (isa == Isa::Avx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

Isa best_supported_isa() { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

const KernelTable& active_kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    if (const char* env = std::getenv("QWALK_KERNEL")) {
      const std::string_view v(env);
      if (v == "scalar") return kernel_table(Isa::Scalar);
      if (v == "avx2") return kernel_table(Isa::Avx2);
    }
    return kernel_table(best_supported_isa());
  }();
  return table;
}

}  // namespace qwalk::simd
