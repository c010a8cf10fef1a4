#include "rank1/language.hpp"

#include <algorithm>

#include "rank1/error.hpp"
#include "rank1/tower.hpp"

namespace rank1 {
namespace {

std::vector<std::vector<std::string>> factor_sets(std::string_view w, int max_len) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(max_len) + 1);
  out[0].emplace_back();
  for (int k = 1; k <= max_len; ++k) {
    std::unordered_set<std::string_view> seen;
    for (std::size_t p = 0; p + static_cast<std::size_t>(k) <= w.size(); ++p) seen.insert(w.substr(p, k));
    auto& bucket = out[static_cast<std::size_t>(k)];
    bucket.reserve(seen.size());
    for (auto f : seen) bucket.emplace_back(f);
    std::sort(bucket.begin(), bucket.end());
  }
  return out;
}

}  // namespace

LanguageTable::LanguageTable(int max_len, int stage, std::vector<std::vector<std::string>> by_length)
    : max_len_(max_len), stage_(stage), by_length_(std::move(by_length)) {
  for (const auto& bucket : by_length_) members_.insert(bucket.begin(), bucket.end());
}

const std::vector<std::string>& LanguageTable::factors(int k) const {
  if (k < 0 || k > max_len_) {
    fail(Errc::InvalidArgument, "factor length " + std::to_string(k) + " outside table (max " +
                                    std::to_string(max_len_) + ")");
  }
  return by_length_[static_cast<std::size_t>(k)];
}

bool LanguageTable::contains(std::string_view w) const {
  if (static_cast<int>(w.size()) > max_len_) {
    fail(Errc::InvalidArgument, "word longer than the language table");
  }
  return members_.count(std::string(w)) != 0;
}

std::int64_t LanguageTable::index_of(std::string_view w) const {
  const auto& bucket = factors(static_cast<int>(w.size()));
  auto it = std::lower_bound(bucket.begin(), bucket.end(), w);
  if (it == bucket.end() || *it != w) return -1;
  return it - bucket.begin();
}

LanguageTable LanguageTable::from_word(std::string_view w, int max_len, int stage) {
  return LanguageTable(max_len, stage, factor_sets(w, max_len));
}

LanguageTable language(const CuttingSchedule& s, int max_len, const LanguageOptions& options, const Limits& limits) {
  if (max_len < 1) fail(Errc::InvalidArgument, "language length must be positive");
  if (!options.allow_repeating && !nonconstant_gap_witness(s, 1, options.witness_depth, limits)) {
    fail(Errc::NoWitness, "no non-constant gap witness up to stage " + std::to_string(options.witness_depth) +
                              " (pass allow_repeating to build the language anyway)");
  }
  auto current = factor_sets(word(s, 0, limits).bits, max_len);
  for (int m = 0; m < limits.max_stage; ++m) {
    auto next = factor_sets(word(s, m + 1, limits).bits, max_len);
    // Factor sets only grow with m, and a full-length set must be present.
    if (next == current && !current[static_cast<std::size_t>(max_len)].empty()) {
      return LanguageTable(max_len, m, std::move(current));
    }
    current = std::move(next);
  }
  fail(Errc::NoStabilization, "factor sets of length <= " + std::to_string(max_len) +
                                  " did not stabilize within " + std::to_string(limits.max_stage) + " stages");
}

}  // namespace rank1
