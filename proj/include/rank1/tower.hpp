#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rank1/limits.hpp"
#include "rank1/schedule.hpp"

namespace rank1 {

using Position = std::int64_t;

// h_n for a schedule; raises Errc::Overflow instead of wrapping.
std::int64_t height(const CuttingSchedule& s, int n);
// h_0 .. h_n.
std::vector<std::int64_t> heights(const CuttingSchedule& s, int n);

// W_n over {'0','1'}: '1' marks a spacer level.
struct TowerWord {
  int stage = 0;
  std::string bits;

  std::int64_t length() const { return static_cast<std::int64_t>(bits.size()); }
};

TowerWord word(const CuttingSchedule& s, int n, const Limits& limits = {});

// E_{m,n}: start positions of the expected occurrences of W_n inside W_m.
struct ExpectedSet {
  int m = 0;
  int n = 0;
  std::vector<Position> positions;

  bool contains(Position p) const;
};

// Offsets of the copies of W_n inside W_{n+1}, i.e. E_{n+1,n}.
std::vector<Position> copy_offsets(const CuttingSchedule& s, int n);

ExpectedSet expected_positions(const CuttingSchedule& s, int m, int n, const Limits& limits = {});

// Prefix of W_infinity of the given length.
std::string infinite_word_prefix(const CuttingSchedule& s, std::int64_t length, const Limits& limits = {});

// Two distinct spacer-run lengths between consecutive expected occurrences
// of W_n inside W_k.
struct GapWitness {
  int n = 0;
  int k = 0;
  std::int64_t r = 0;
  std::int64_t r_prime = 0;
};

// Smallest k in (n, max_stage] whose expected W_n occurrences are separated
// by at least two different numbers of 1s.
std::optional<GapWitness> nonconstant_gap_witness(const CuttingSchedule& s, int n, int max_stage,
                                                  const Limits& limits = {});

enum class SpacerVerdict { RepeatingConsistent, NonRepeatingBounded, NonRepeatingUnbounded, Inconclusive };

std::string_view verdict_name(SpacerVerdict v);

// Depth-qualified evidence about which of the three spacer regimes the
// schedule falls in. Never a proof.
struct SpacerClassification {
  SpacerVerdict verdict = SpacerVerdict::Inconclusive;
  int depth = 0;
  // RepeatingConsistent: minimal period of W_depth (equal to that of W_{depth-1}).
  std::optional<std::int64_t> period;
  // Longest 1-run in W_depth.
  std::int64_t a_max = 0;
  std::optional<GapWitness> witness;
  // NonRepeatingUnbounded: stages at which the longest 1-run strictly grew.
  std::vector<int> growth_stages;
  std::vector<std::int64_t> max_runs;  // longest 1-run of W_0 .. W_depth
};

SpacerClassification classify(const CuttingSchedule& s, int max_stage, const Limits& limits = {});

// Smallest p > 0 with w[i] == w[i + p] for all valid i (|w| if none).
std::int64_t minimal_period(std::string_view w);

}  // namespace rank1
