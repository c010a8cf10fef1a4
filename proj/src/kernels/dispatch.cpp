#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace rank1::kernels {

const KernelSet& scalar() { return detail::kScalar; }

const KernelSet* avx2() {
#if defined(RANK1_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi");
  return supported ? &detail::kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* force = std::getenv("RANK1_SIMD");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) return &detail::kScalar;
    const KernelSet* wide = avx2();
    return wide != nullptr ? wide : &detail::kScalar;
  }();
  return *chosen;
}

}  // namespace rank1::kernels
