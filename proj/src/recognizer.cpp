#include "rank1/recognizer.hpp"

#include <algorithm>
#include <iterator>

#include "rank1/error.hpp"
#include "rank1/kernels.hpp"

namespace rank1 {
namespace {

std::unordered_set<std::string> templates_at(const CuttingSchedule& s, int n, int stage, std::int64_t l,
                                             const Limits& limits) {
  const auto w = word(s, stage, limits);
  const auto e = expected_positions(s, stage, n, limits);
  std::unordered_set<std::string> out;
  for (auto p : e.positions) {
    if (p + l <= w.length()) out.insert(w.bits.substr(static_cast<std::size_t>(p), static_cast<std::size_t>(l)));
  }
  return out;
}

}  // namespace

std::vector<Position> occurrences(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) fail(Errc::InvalidArgument, "needle must be nonempty");
  std::vector<Position> out;
  kernels::active().find_all(haystack, needle, out);
  return out;
}

OccurrenceReport unexpected_occurrences(const CuttingSchedule& s, int m, int n, const Limits& limits) {
  if (!(m > n && n >= 0)) fail(Errc::InvalidArgument, "unexpected_occurrences needs m > n >= 0");
  OccurrenceReport r{m, n, {}, {}, {}};
  const auto wm = word(s, m, limits);
  const auto wn = word(s, n, limits);
  r.all = occurrences(wm.bits, wn.bits);
  r.expected = expected_positions(s, m, n, limits).positions;
  std::set_difference(r.all.begin(), r.all.end(), r.expected.begin(), r.expected.end(),
                      std::back_inserter(r.unexpected));
  return r;
}

ContextBound context_bound(const CuttingSchedule& s, int n, int max_stage, const Limits& limits) {
  const auto w = nonconstant_gap_witness(s, n, max_stage, limits);
  if (!w) {
    fail(Errc::NoWitness, "expected W_" + std::to_string(n) + " gaps are constant up to stage " +
                              std::to_string(max_stage) + "; the context bound is undefined");
  }
  std::int64_t l = 0;
  const auto hk = height(s, w->k);
  const auto hn = height(s, n);
  if (__builtin_mul_overflow(hk, std::int64_t{2}, &l) || __builtin_add_overflow(l, hn, &l)) {
    fail(Errc::Overflow, "context bound overflows");
  }
  return ContextBound{n, l, w->k, BoundKind::PaperBound};
}

ContextBound minimal_context(const CuttingSchedule& s, int n, int horizon, const Limits& limits) {
  if (!(horizon > n && n >= 0)) fail(Errc::InvalidArgument, "minimal_context needs M > n >= 0");
  const auto hn = height(s, n);
  const auto& k = kernels::active();
  // A window of length l read at expected e also occurs at unexpected u iff
  // l <= lce(e, u) (the common extension is already capped by the word end).
  // So the answer is 1 + the largest such common extension, floored at h_n.
  std::int64_t worst = hn - 1;
  for (int m = n + 1; m <= horizon; ++m) {
    const auto report = unexpected_occurrences(s, m, n, limits);
    const auto wm = word(s, m, limits);
    const std::string_view text(wm.bits);
    for (auto u : report.unexpected) {
      for (auto e : report.expected) {
        const auto lce = k.common_prefix(text.substr(static_cast<std::size_t>(e)),
                                         text.substr(static_cast<std::size_t>(u)));
        worst = std::max(worst, lce);
      }
    }
  }
  return ContextBound{n, worst + 1, horizon, BoundKind::BruteMinimal};
}

std::string_view recognition_name(Recognition r) {
  switch (r) {
    case Recognition::Expected: return "Expected";
    case Recognition::Unexpected: return "Unexpected";
    case Recognition::InsufficientContext: return "InsufficientContext";
  }
  return "InsufficientContext";
}

ExpectedRecognizer::ExpectedRecognizer(const CuttingSchedule& s, int n, int template_stage, int witness_depth,
                                       const Limits& limits)
    : n_(n), template_stage_(template_stage), bound_(context_bound(s, n, witness_depth, limits)) {
  if (template_stage < n) fail(Errc::InvalidArgument, "template stage must be >= n");
  pattern_ = word(s, n, limits).bits;
  templates_ = templates_at(s, n, template_stage, bound_.l, limits);
  stable_ = templates_at(s, n, template_stage + 1, bound_.l, limits) == templates_;
}

Recognition ExpectedRecognizer::classify(std::string_view w, Position p) const {
  const auto hn = static_cast<Position>(pattern_.size());
  const auto len = static_cast<Position>(w.size());
  if (p < 0 || p + hn > len || w.substr(static_cast<std::size_t>(p), pattern_.size()) != pattern_) {
    fail(Errc::InvalidArgument, "W_" + std::to_string(n_) + " does not occur at position " + std::to_string(p));
  }
  if (p + bound_.l > len) return Recognition::InsufficientContext;
  const std::string window(w.substr(static_cast<std::size_t>(p), static_cast<std::size_t>(bound_.l)));
  return templates_.count(window) ? Recognition::Expected : Recognition::Unexpected;
}

Position ExpectedRecognizer::decided_end(std::string_view w) const {
  return std::max<Position>(0, static_cast<Position>(w.size()) - bound_.l + 1);
}

std::vector<Position> ExpectedRecognizer::expected_starts(std::string_view w) const {
  std::vector<Position> out;
  const auto end = decided_end(w);
  for (auto p : occurrences(w, pattern_)) {
    if (p >= end) break;
    if (classify(w, p) == Recognition::Expected) out.push_back(p);
  }
  return out;
}

Recognition is_expected_start(const CuttingSchedule& s, std::string_view w, Position p, int n, int template_stage,
                              int witness_depth, const Limits& limits) {
  return ExpectedRecognizer(s, n, template_stage, witness_depth, limits).classify(w, p);
}

LemmaCheckReport lemma_gap_check(const CuttingSchedule& s, int m, int n, const Limits& limits) {
  if (!(m > n && n >= 0)) fail(Errc::InvalidArgument, "lemma_gap_check needs m > n >= 0");
  LemmaCheckReport out{m, n, 0, 0, {}};
  const auto wm = word(s, m, limits);
  const auto hn = height(s, n);
  const auto occ = unexpected_occurrences(s, m, n, limits);
  const auto len = wm.length();
  const auto& text = wm.bits;

  auto is_occurrence = [&](Position p) { return std::binary_search(occ.all.begin(), occ.all.end(), p); };
  auto ones_from = [&](Position p) {
    Position q = p;
    while (q < len && text[q] == '1') ++q;
    return q - p;
  };

  const auto& e = occ.expected;
  for (std::size_t idx = 0; idx + 1 < e.size(); ++idx) {
    const Position i = e[idx];
    const std::int64_t r = e[idx + 1] - i - hn;
    auto first = std::upper_bound(occ.all.begin(), occ.all.end(), i);
    for (auto it = first; it != occ.all.end() && *it < i + hn; ++it) {
      const Position j = *it;
      const std::int64_t s_run = ones_from(j + hn);
      if (!is_occurrence(j + hn + s_run)) continue;
      ++out.configurations;
      if (r != s_run) {
        ++out.violations;
        out.details.push_back({i, j, r, s_run});
      }
    }
  }
  return out;
}

}  // namespace rank1
