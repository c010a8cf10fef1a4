#pragma once

#include "rank1/kernels.hpp"

namespace rank1::kernels::detail {

extern const KernelSet kScalar;
#if defined(RANK1_HAVE_AVX2)
extern const KernelSet kAvx2;
#endif

}  // namespace rank1::kernels::detail
