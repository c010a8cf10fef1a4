#pragma once

// Byte-level inner loops over {0,1} words. Each kernel has a scalar reference
// and, on x86-64, an AVX2 variant; active() picks one at runtime from CPUID.
// Setting RANK1_SIMD=scalar forces the reference path.

#include <cstdint>
#include <string_view>
#include <vector>

namespace rank1::kernels {

struct KernelSet {
  const char* name;
  // All p with hay[p, p + |needle|) == needle, ascending. |needle| >= 1.
  void (*find_all)(std::string_view hay, std::string_view needle, std::vector<std::int64_t>& out);
  std::int64_t (*count_byte)(std::string_view text, char c);
  // Length of the longest run of c.
  std::int64_t (*longest_run)(std::string_view text, char c);
  // Length of the longest common prefix.
  std::int64_t (*common_prefix)(std::string_view a, std::string_view b);
};

const KernelSet& scalar();
// nullptr when the variant was not compiled in or the CPU lacks AVX2.
const KernelSet* avx2();
const KernelSet& active();

}  // namespace rank1::kernels
