#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rank1/limits.hpp"
#include "rank1/schedule.hpp"
#include "rank1/tower.hpp"

namespace rank1 {

// Exact substring search; needle must be nonempty.
std::vector<Position> occurrences(std::string_view haystack, std::string_view needle);

struct OccurrenceReport {
  int m = 0;
  int n = 0;
  std::vector<Position> all;
  std::vector<Position> expected;
  std::vector<Position> unexpected;
};

OccurrenceReport unexpected_occurrences(const CuttingSchedule& s, int m, int n, const Limits& limits = {});

enum class BoundKind { PaperBound, BruteMinimal };

struct ContextBound {
  int n = 0;
  std::int64_t l = 0;
  // Witness stage for PaperBound (l = 2 h_k + h_n); search horizon M for BruteMinimal.
  int witness_stage = 0;
  BoundKind kind = BoundKind::PaperBound;
};

// l(n) = 2 h_k + h_n with k from nonconstant_gap_witness(n, max_stage).
// Errc::NoWitness when the gaps stay constant up to max_stage.
ContextBound context_bound(const CuttingSchedule& s, int n, int max_stage, const Limits& limits = {});

// Smallest l >= h_n such that, for every m in (n, M], each length-l factor of
// W_m read from an expected W_n start occurs in W_m only at expected starts.
ContextBound minimal_context(const CuttingSchedule& s, int n, int horizon, const Limits& limits = {});

enum class Recognition { Expected, Unexpected, InsufficientContext };

std::string_view recognition_name(Recognition r);

// Decides whether an occurrence of W_n begins an expected occurrence by
// looking at the l(n) symbols that follow it. Templates are the length-l(n)
// factors of W_M read from E_{M,n}.
class ExpectedRecognizer {
 public:
  ExpectedRecognizer(const CuttingSchedule& s, int n, int template_stage, int witness_depth = 10,
                     const Limits& limits = {});

  int stage() const { return n_; }
  int template_stage() const { return template_stage_; }
  std::int64_t context_length() const { return bound_.l; }
  const ContextBound& bound() const { return bound_; }
  const std::string& pattern() const { return pattern_; }
  std::size_t template_count() const { return templates_.size(); }
  // False when the templates taken at M and at M+1 differ; the caller should
  // pick a larger template stage.
  bool stable() const { return stable_; }

  // Precondition: W_n occurs in w at p (Errc::InvalidArgument otherwise).
  Recognition classify(std::string_view w, Position p) const;

  // All p in [0, |w| - l(n)] that begin an expected W_n occurrence, plus the
  // first position whose context is cut off (decided range end).
  std::vector<Position> expected_starts(std::string_view w) const;
  Position decided_end(std::string_view w) const;

 private:
  int n_;
  int template_stage_;
  ContextBound bound_;
  std::string pattern_;
  std::unordered_set<std::string> templates_;
  bool stable_ = false;
};

Recognition is_expected_start(const CuttingSchedule& s, std::string_view w, Position p, int n,
                              int template_stage, int witness_depth = 10, const Limits& limits = {});

struct LemmaCheckReport {
  int m = 0;
  int n = 0;
  std::int64_t configurations = 0;
  std::int64_t violations = 0;
  // (i, j, r, s) for each violation.
  struct Violation {
    Position i, j;
    std::int64_t r, s;
  };
  std::vector<Violation> details;
};

// Enumerates every expected start i with successor gap r and every occurrence
// j in (i, i + h_n) that is followed by s 1s and another occurrence; counts
// the tuples with r != s.
LemmaCheckReport lemma_gap_check(const CuttingSchedule& s, int m, int n, const Limits& limits = {});

}  // namespace rank1
