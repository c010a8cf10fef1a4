#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rank1/language.hpp"

namespace rank1 {

// A radius-R sliding-block code: one output symbol per (2R+1)-factor of the
// language. Applied to a word of length k >= 2R+1 it yields k - 2R symbols,
// output i being determined by input [i, i + 2R].
class BlockCode {
 public:
  BlockCode(int radius, std::vector<std::string> domain, std::string outputs);

  int radius() const { return radius_; }
  int window() const { return 2 * radius_ + 1; }
  const std::vector<std::string>& domain() const { return domain_; }
  // outputs()[i] is the image of domain()[i].
  const std::string& outputs() const { return outputs_; }
  char image(std::string_view window) const;

  friend bool operator==(const BlockCode&, const BlockCode&) = default;
  friend auto operator<=>(const BlockCode& a, const BlockCode& b) {
    if (auto c = a.radius_ <=> b.radius_; c != 0) return c;
    return a.outputs_ <=> b.outputs_;
  }

 private:
  int radius_;
  std::vector<std::string> domain_;
  std::string outputs_;
};

std::string apply_code(const BlockCode& code, std::string_view w);

// Table w -> w[R + k]: the k-th power of the left shift, trimmed by R.
BlockCode shift_power_code(int k, int radius, const LanguageTable& lang);

// outer(inner(.)) as a code of radius R_outer + R_inner.
BlockCode compose(const BlockCode& outer, const BlockCode& inner, const LanguageTable& lang);

// Every shift power whose table equals `code`'s, in the order 0, 1, -1, 2, -2, ...
std::vector<int> matching_shift_powers(const BlockCode& code, const LanguageTable& lang);

}  // namespace rank1
