#include "rank1/tower.hpp"

#include <algorithm>

#include "rank1/error.hpp"
#include "rank1/kernels.hpp"

namespace rank1 {
namespace {

std::int64_t next_height(const StageRule& rule, std::int64_t h) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(h, static_cast<std::int64_t>(rule.copies), &out) ||
      __builtin_add_overflow(out, rule.spacer_total(), &out)) {
    fail(Errc::Overflow, "tower height overflows 64 bits");
  }
  return out;
}

void check_stage(int n) {
  if (n < 0) fail(Errc::InvalidArgument, "stage must be nonnegative");
}

void check_budget(std::int64_t size, const Limits& limits, const char* what) {
  if (size > limits.max_word_length) {
    fail(Errc::BudgetExceeded, std::string(what) + " of size " + std::to_string(size) +
                                   " exceeds budget " + std::to_string(limits.max_word_length));
  }
}

// 1-gaps between consecutive expected occurrences of a word of height hn.
std::vector<std::int64_t> gaps_of(const std::vector<Position>& e, std::int64_t hn) {
  std::vector<std::int64_t> gaps;
  for (std::size_t i = 1; i < e.size(); ++i) gaps.push_back(e[i] - e[i - 1] - hn);
  return gaps;
}

}  // namespace

std::int64_t height(const CuttingSchedule& s, int n) {
  check_stage(n);
  std::int64_t h = s.h0();
  for (int i = 0; i < n; ++i) h = next_height(s.rule(i), h);
  return h;
}

std::vector<std::int64_t> heights(const CuttingSchedule& s, int n) {
  check_stage(n);
  std::vector<std::int64_t> hs{s.h0()};
  for (int i = 0; i < n; ++i) hs.push_back(next_height(s.rule(i), hs.back()));
  return hs;
}

TowerWord word(const CuttingSchedule& s, int n, const Limits& limits) {
  check_stage(n);
  check_budget(height(s, n), limits, "word");
  std::string w(static_cast<std::size_t>(s.h0()), '0');
  for (int i = 0; i < n; ++i) {
    const auto rule = s.rule(i);
    std::string next;
    next.reserve(static_cast<std::size_t>(next_height(rule, static_cast<std::int64_t>(w.size()))));
    for (int c = 0; c < rule.copies; ++c) {
      if (c > 0) next.append(static_cast<std::size_t>(rule.spacers[c - 1]), '1');
      next += w;
    }
    w = std::move(next);
  }
  return TowerWord{n, std::move(w)};
}

bool ExpectedSet::contains(Position p) const {
  return std::binary_search(positions.begin(), positions.end(), p);
}

std::vector<Position> copy_offsets(const CuttingSchedule& s, int n) {
  const auto rule = s.rule(n);
  const auto hn = height(s, n);
  std::vector<Position> out{0};
  for (int c = 1; c < rule.copies; ++c) out.push_back(out.back() + hn + rule.spacers[c - 1]);
  return out;
}

ExpectedSet expected_positions(const CuttingSchedule& s, int m, int n, const Limits& limits) {
  check_stage(n);
  if (m < n) fail(Errc::InvalidArgument, "expected_positions needs m >= n");
  // Size check before materializing: |E_{m,n}| is the product of copy counts.
  std::int64_t count = 1;
  for (int i = n; i < m; ++i) {
    if (__builtin_mul_overflow(count, static_cast<std::int64_t>(s.rule(i).copies), &count)) {
      fail(Errc::BudgetExceeded, "expected set size overflows");
    }
    check_budget(count, limits, "expected set");
  }
  height(s, m);  // surfaces overflow
  // Compose from the top down: E_{m,i} = E_{m,i+1} + E_{i+1,i}.
  std::vector<Position> current{0};
  for (int i = m - 1; i >= n; --i) {
    const auto offs = copy_offsets(s, i);
    std::vector<Position> next;
    next.reserve(current.size() * offs.size());
    for (auto a : current) {
      for (auto b : offs) next.push_back(a + b);
    }
    current = std::move(next);
  }
  return ExpectedSet{m, n, std::move(current)};
}

std::string infinite_word_prefix(const CuttingSchedule& s, std::int64_t length, const Limits& limits) {
  if (length < 1) fail(Errc::InvalidArgument, "prefix length must be positive");
  check_budget(length, limits, "prefix");
  int n = 0;
  while (height(s, n) < length) ++n;
  auto w = word(s, n, limits);
  return w.bits.substr(0, static_cast<std::size_t>(length));
}

std::optional<GapWitness> nonconstant_gap_witness(const CuttingSchedule& s, int n, int max_stage,
                                                  const Limits& limits) {
  check_stage(n);
  const auto hn = height(s, n);
  for (int k = n + 1; k <= max_stage; ++k) {
    const auto gaps = gaps_of(expected_positions(s, k, n, limits).positions, hn);
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      if (gaps[i] != gaps[0]) return GapWitness{n, k, gaps[0], gaps[i]};
    }
  }
  return std::nullopt;
}

std::string_view verdict_name(SpacerVerdict v) {
  switch (v) {
    case SpacerVerdict::RepeatingConsistent: return "RepeatingConsistent";
    case SpacerVerdict::NonRepeatingBounded: return "NonRepeatingBounded";
    case SpacerVerdict::NonRepeatingUnbounded: return "NonRepeatingUnbounded";
    case SpacerVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::int64_t minimal_period(std::string_view w) {
  const auto n = static_cast<std::int64_t>(w.size());
  if (n == 0) return 0;
  // Border array; period = n - longest proper border.
  std::vector<std::int64_t> border(static_cast<std::size_t>(n), 0);
  std::int64_t b = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  return n - border[n - 1];
}

SpacerClassification classify(const CuttingSchedule& s, int max_stage, const Limits& limits) {
  if (max_stage < 1) fail(Errc::InvalidArgument, "classify needs maxStage >= 1");
  SpacerClassification out;
  out.depth = max_stage;

  const auto& k = kernels::active();
  std::string prev_word;
  std::string last_word;
  for (int m = 0; m <= max_stage; ++m) {
    auto w = word(s, m, limits);
    out.max_runs.push_back(k.longest_run(w.bits, '1'));
    prev_word = std::move(last_word);
    last_word = std::move(w.bits);
  }
  out.a_max = out.max_runs.back();
  out.witness = nonconstant_gap_witness(s, 1, max_stage, limits);

  if (!out.witness) {
    const auto p_last = minimal_period(last_word);
    const auto p_prev = minimal_period(prev_word);
    if (p_last == p_prev) {
      out.verdict = SpacerVerdict::RepeatingConsistent;
      out.period = p_last;
    } else {
      out.verdict = SpacerVerdict::Inconclusive;
    }
    return out;
  }

  const auto& runs = out.max_runs;
  if (runs[max_stage] == runs[max_stage - 1]) {
    out.verdict = SpacerVerdict::NonRepeatingBounded;
  } else {
    out.verdict = SpacerVerdict::NonRepeatingUnbounded;
    for (int m = 1; m <= max_stage; ++m) {
      if (runs[m] > runs[m - 1]) out.growth_stages.push_back(m);
    }
  }
  return out;
}

}  // namespace rank1
