#pragma once

#include <cstdint>
#include <string_view>

namespace rank1 {

// Hard ceilings for every materialization. Exceeding one raises
// Errc::BudgetExceeded; nothing is ever silently truncated.
struct Limits {
  std::int64_t max_word_length = 10'000'000;
  std::int64_t max_search_nodes = 50'000'000;
  int max_stage = 48;

  // RANK1_BUDGET is either a bare integer (word length) or a comma list
  // such as "words=2000000,nodes=1000000,stages=32".
  static Limits from_env();
  static Limits parse(std::string_view spec);
};

}  // namespace rank1
