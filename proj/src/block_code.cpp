#include "rank1/block_code.hpp"

#include <algorithm>
#include <cstdlib>

#include "rank1/error.hpp"

namespace rank1 {

BlockCode::BlockCode(int radius, std::vector<std::string> domain, std::string outputs)
    : radius_(radius), domain_(std::move(domain)), outputs_(std::move(outputs)) {
  if (radius_ < 0) fail(Errc::InvalidArgument, "radius must be nonnegative");
  if (domain_.size() != outputs_.size()) fail(Errc::InvalidArgument, "table size mismatch");
  if (!std::is_sorted(domain_.begin(), domain_.end())) fail(Errc::InvalidArgument, "code domain must be sorted");
}

char BlockCode::image(std::string_view window) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), window);
  if (it == domain_.end() || *it != window) {
    fail(Errc::InvalidArgument, "window '" + std::string(window) + "' is not in the code's domain");
  }
  return outputs_[static_cast<std::size_t>(it - domain_.begin())];
}

std::string apply_code(const BlockCode& code, std::string_view w) {
  const auto span = static_cast<std::size_t>(code.window());
  if (w.size() < span) fail(Errc::InvalidArgument, "word shorter than the code window");
  std::string out;
  out.reserve(w.size() - span + 1);
  for (std::size_t i = 0; i + span <= w.size(); ++i) out.push_back(code.image(w.substr(i, span)));
  return out;
}

BlockCode shift_power_code(int k, int radius, const LanguageTable& lang) {
  if (std::abs(k) > radius) {
    fail(Errc::OffsetExceedsRadius, "shift " + std::to_string(k) + " exceeds radius " + std::to_string(radius));
  }
  const auto& dom = lang.factors(2 * radius + 1);
  std::string outputs;
  for (const auto& w : dom) outputs.push_back(w[static_cast<std::size_t>(radius + k)]);
  return BlockCode(radius, dom, std::move(outputs));
}

BlockCode compose(const BlockCode& outer, const BlockCode& inner, const LanguageTable& lang) {
  const int radius = outer.radius() + inner.radius();
  const auto& dom = lang.factors(2 * radius + 1);
  std::string outputs;
  for (const auto& w : dom) outputs += apply_code(outer, apply_code(inner, w));
  return BlockCode(radius, dom, std::move(outputs));
}

std::vector<int> matching_shift_powers(const BlockCode& code, const LanguageTable& lang) {
  std::vector<int> out;
  for (int step = 0; step <= 2 * code.radius(); ++step) {
    const int k = step % 2 == 1 ? (step + 1) / 2 : -(step / 2);
    if (shift_power_code(k, code.radius(), lang) == code) out.push_back(k);
  }
  return out;
}

}  // namespace rank1
