#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstring>

#include "kernels_impl.hpp"

namespace rank1::kernels::detail {
namespace {

inline __m256i load(const char* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline std::uint32_t eq_mask(__m256i block, __m256i needle) {
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(block, needle)));
}

// First/last byte filter, then a full compare per candidate.
void find_all_avx2(std::string_view hay, std::string_view needle, std::vector<std::int64_t>& out) {
  out.clear();
  const std::size_t k = needle.size();
  const std::size_t n = hay.size();
  if (k == 0 || n < k) return;
  const char* h = hay.data();
  const __m256i first = _mm256_set1_epi8(needle[0]);
  const __m256i last = _mm256_set1_epi8(needle[k - 1]);
  const std::size_t last_start = n - k;

  std::size_t p = 0;
  for (; p + 32 <= last_start + 1; p += 32) {
    std::uint32_t mask = eq_mask(load(h + p), first) & eq_mask(load(h + p + k - 1), last);
    while (mask != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
      if (std::memcmp(h + p + bit, needle.data(), k) == 0) {
        out.push_back(static_cast<std::int64_t>(p + bit));
      }
      mask &= mask - 1;
    }
  }
  for (; p <= last_start; ++p) {
    if (h[p] == needle[0] && std::memcmp(h + p, needle.data(), k) == 0) {
      out.push_back(static_cast<std::int64_t>(p));
    }
  }
}

std::int64_t count_byte_avx2(std::string_view text, char c) {
  const __m256i target = _mm256_set1_epi8(c);
  const char* s = text.data();
  const std::size_t n = text.size();
  std::int64_t total = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) total += std::popcount(eq_mask(load(s + i), target));
  for (; i < n; ++i) total += s[i] == c;
  return total;
}

std::int64_t longest_run_in_mask(std::uint32_t m) {
  std::int64_t len = 0;
  while (m != 0) {
    m &= m >> 1;
    ++len;
  }
  return len;
}

std::int64_t longest_run_avx2(std::string_view text, char c) {
  const __m256i target = _mm256_set1_epi8(c);
  const char* s = text.data();
  const std::size_t n = text.size();
  std::int64_t best = 0, current = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const std::uint32_t m = eq_mask(load(s + i), target);
    if (m == 0xFFFFFFFFu) {
      current += 32;
      continue;
    }
    current += std::countr_one(m);
    best = std::max({best, current, longest_run_in_mask(m)});
    current = std::countl_one(m);
  }
  for (; i < n; ++i) {
    current = s[i] == c ? current + 1 : 0;
    best = std::max(best, current);
  }
  return std::max(best, current);
}

std::int64_t common_prefix_avx2(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const std::uint32_t same = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(load(a.data() + i), load(b.data() + i))));
    if (same != 0xFFFFFFFFu) return static_cast<std::int64_t>(i + std::countr_one(same));
  }
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<std::int64_t>(i);
}

}  // namespace

const KernelSet kAvx2{"avx2", find_all_avx2, count_byte_avx2, longest_run_avx2, common_prefix_avx2};

}  // namespace rank1::kernels::detail
