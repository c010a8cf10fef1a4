#include <algorithm>
#include <cstring>

#include "kernels_impl.hpp"

namespace rank1::kernels::detail {
namespace {

void find_all_scalar(std::string_view hay, std::string_view needle, std::vector<std::int64_t>& out) {
  out.clear();
  const std::size_t k = needle.size();
  if (k == 0 || hay.size() < k) return;
  for (std::size_t p = 0; p + k <= hay.size(); ++p) {
    if (hay[p] == needle[0] && std::memcmp(hay.data() + p, needle.data(), k) == 0) {
      out.push_back(static_cast<std::int64_t>(p));
    }
  }
}

std::int64_t count_byte_scalar(std::string_view text, char c) {
  return static_cast<std::int64_t>(std::count(text.begin(), text.end(), c));
}

std::int64_t longest_run_scalar(std::string_view text, char c) {
  std::int64_t best = 0, current = 0;
  for (char x : text) {
    current = x == c ? current + 1 : 0;
    best = std::max(best, current);
  }
  return best;
}

std::int64_t common_prefix_scalar(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return static_cast<std::int64_t>(i);
}

}  // namespace

const KernelSet kScalar{"scalar", find_all_scalar, count_byte_scalar, longest_run_scalar,
                        common_prefix_scalar};

}  // namespace rank1::kernels::detail
