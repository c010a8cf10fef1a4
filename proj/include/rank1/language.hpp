#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rank1/limits.hpp"
#include "rank1/schedule.hpp"

namespace rank1 {

// Factors of length <= max_len of the subshift, read from W_M where M is the
// first stage whose factor sets agree with those of W_{M+1}.
class LanguageTable {
 public:
  LanguageTable(int max_len, int stage, std::vector<std::vector<std::string>> by_length);

  int max_len() const { return max_len_; }
  int stage() const { return stage_; }
  // Sorted factors of length k, 0 <= k <= max_len.
  const std::vector<std::string>& factors(int k) const;
  bool contains(std::string_view w) const;
  // Index of w in factors(|w|), or -1.
  std::int64_t index_of(std::string_view w) const;

  // Builds a table from a single word's factors (no stabilization search).
  static LanguageTable from_word(std::string_view w, int max_len, int stage = -1);

 private:
  int max_len_;
  int stage_;
  std::vector<std::vector<std::string>> by_length_;
  std::unordered_set<std::string> members_;
};

struct LanguageOptions {
  bool allow_repeating = false;
  // Witness search horizon for the non-repeating precondition.
  int witness_depth = 10;
};

LanguageTable language(const CuttingSchedule& s, int max_len, const LanguageOptions& options = {},
                       const Limits& limits = {});

}  // namespace rank1
