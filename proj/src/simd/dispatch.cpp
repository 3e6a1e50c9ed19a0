#include <cstdlib>
#include <string_view>

#include "perscert/simd/f2_kernels.hpp"

namespace perscert::simd {

#if defined(PERSCERT_HAVE_AVX2)
const F2Kernels& avx2_kernel_table();
#endif

const F2Kernels* avx2_kernels() {
#if defined(PERSCERT_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const F2Kernels& active_kernels() {
  static const F2Kernels& table = [] () -> const F2Kernels& {
    const char* env = std::getenv("PERSCERT_SIMD");
    if (env && std::string_view(env) == "scalar") return scalar_kernels();
    if (const F2Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace perscert::simd
