#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rank1/block_code.hpp"
#include "rank1/language.hpp"
#include "rank1/limits.hpp"
#include "rank1/schedule.hpp"

namespace rank1 {

struct EnumerationStats {
  std::int64_t nodes_visited = 0;
  std::int64_t table_slots = 0;  // number of (2R+1)-factors
};

// All total radius-R tables that map every length-L factor into the
// language. Depth-first over the table with pruning on any fully determined
// contiguous stretch of an image that leaves the language. The tree is split
// across `threads` workers; the result is sorted.
std::vector<BlockCode> enumerate_codes(const LanguageTable& lang, int radius, int test_len,
                                       const Limits& limits = {}, EnumerationStats* stats = nullptr,
                                       unsigned threads = 0);

struct InvertibleCode {
  BlockCode code;
  BlockCode inverse;
};

// Codes that have a two-sided inverse of radius <= max_inverse_radius on all
// length-L factors. The inverse is constructed, not guessed: h(g(w)) = w[R+R']
// fixes h on every image window.
std::vector<InvertibleCode> invertible_codes(const std::vector<BlockCode>& codes, const LanguageTable& lang,
                                             int max_inverse_radius, int test_len);

// Finds an inverse for one code, if any.
std::optional<BlockCode> find_inverse(const BlockCode& code, const LanguageTable& lang, int max_inverse_radius,
                                      int test_len);

struct ProbeEntry {
  BlockCode code;
  BlockCode inverse;
  std::optional<int> shift;                     // matched power, nullopt = EXOTIC
  std::optional<std::int64_t> recovered_offset;  // from the return-time matching
  std::string offset_note;                       // why recovery was skipped or failed
};

struct ProbeReport {
  std::string schedule;
  int radius = 0;
  int test_len = 0;
  int inverse_radius = 0;
  bool in_theorem_scope = false;
  int language_stage = 0;
  int offset_stage = 0;  // base stage used for offset recovery, 0 if skipped
  std::int64_t codes_examined = 0;
  std::int64_t table_slots = 0;
  std::int64_t language_preserving = 0;
  std::int64_t invertible = 0;
  std::int64_t exotic_count = 0;
  std::vector<ProbeEntry> entries;
};

struct ProbeOptions {
  int witness_depth = 10;
  // Cross-check each invertible code by recovering its offset from return times.
  bool recover_offsets = true;
  unsigned threads = 0;
};

// Default test length: max(2R + 2 l(1), 3 h_2), or max(2R + h_1, 3 h_2)
// when no witness exists.
int default_test_length(const CuttingSchedule& s, int radius, int witness_depth = 10, const Limits& limits = {});

ProbeReport centralizer_probe(const CuttingSchedule& s, int radius, int test_len, int inverse_radius,
                              const ProbeOptions& options = {}, const Limits& limits = {});

}  // namespace rank1
