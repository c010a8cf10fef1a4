#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rank1/block_code.hpp"
#include "rank1/limits.hpp"
#include "rank1/points.hpp"
#include "rank1/recognizer.hpp"
#include "rank1/schedule.hpp"

namespace rank1 {

// A finite view of a sequence x: x_t = word[origin + t].
struct XWindow {
  std::string word;
  Position origin = 0;
};

struct PhiPair {
  std::int64_t i = 0;
  std::int64_t phi = 0;
};

// Times are relative to x's origin. Returns are visits to the stage-n base
// (n = 1 unless re-based). Matching is built for g composed with
// sigma^pre_shift; offsets are for that composite.
struct PhiMatching {
  int stage = 1;
  int pre_shift = 0;
  std::int64_t h = 0;             // h_stage
  std::vector<std::int64_t> zx;   // decided returns of x
  std::vector<std::int64_t> zgx;  // decided returns of g(x)
  std::vector<PhiPair> pairs;     // one per i in the safe sub-window
  std::vector<std::int64_t> offsets;
  std::optional<std::int64_t> recovered_offset;  // common offset minus pre_shift
};

// Matches each safe i in Z(x) to the unique element of Z(g sigma^m x) in
// (i - h_n, i], n = rec.stage(). Errc::NormalizationRequired when a partner
// is missing or the offset is not in E_{n,n-1} (g does not carry B_n into
// B_{n-1}), Errc::InsufficientContext when the safe sub-window is empty.
PhiMatching phi_map(const ExpectedRecognizer& rec, const CuttingSchedule& s, const XWindow& x, const BlockCode& g,
                    int pre_shift = 0, const Limits& limits = {});
PhiMatching phi_map(const CuttingSchedule& s, const XWindow& x, const BlockCode& g, int context_stage,
                    int pre_shift = 0, int witness_depth = 10, const Limits& limits = {});

// Tries pre-shifts 0, 1, -1, 2, ... up to |m| <= R + h_n. NormalizationRequired
// moves to the next m; a matching with unequal offsets is kept only if no
// later m yields equal ones.
PhiMatching phi_map_normalized(const ExpectedRecognizer& rec, const CuttingSchedule& s, const XWindow& x,
                               const BlockCode& g, const Limits& limits = {});

// Common value of i - phi(i), corrected for the pre-shift.
// Errc::OffsetsInconsistent when the offsets differ.
std::int64_t recover_offset(const PhiMatching& m);

// Order, injectivity, the per-pair bound and surjectivity onto Z(g x)
// between the first and last image. Empty means all hold.
std::vector<std::string> matching_structure_violations(const PhiMatching& m);

struct PsiViolation {
  std::int64_t i = 0;
  std::int64_t psi_x = 0;
  std::int64_t psi_gx = 0;
};

// Pairs where both Psi_x(i) and Psi_gx(phi(i)) are defined and differ.
// Errc::TooFewReturns with fewer than two pairs.
std::vector<PsiViolation> psi_conjugation_check(const PhiMatching& m, const GapFunction& psi_x,
                                                const GapFunction& psi_gx);

// Stage n used for offset recovery: with bounded spacer runs, the least n
// with h_{n-1} > a_max (dropping initial stages until the base outgrows every
// spacer run); with unbounded runs, 1.
int recovery_stage(const CuttingSchedule& s, int depth = 10, const Limits& limits = {});

// Reusable recognizer plus x window for recovering offsets of many codes.
class OffsetRecovery {
 public:
  OffsetRecovery(const CuttingSchedule& s, int witness_depth = 10, const Limits& limits = {});

  struct Result {
    std::int64_t offset = 0;
    PhiMatching matching;
    std::vector<PsiViolation> psi_violations;
  };
  Result recover(const BlockCode& g) const;

  int stage() const { return rec_.stage(); }
  // x is W_K for the least K with h_K >= 8 l(n) + 128, origin at its middle.
  const XWindow& window() const { return x_; }
  int window_stage() const { return window_stage_; }
  // Templates come from the first stable stage, or from W_{K+1} when the
  // templates keep changing (unbounded spacer runs).
  const ExpectedRecognizer& recognizer() const { return rec_; }

 private:
  OffsetRecovery(const CuttingSchedule& s, int n, int witness_depth, const Limits& limits);

  CuttingSchedule s_;
  Limits limits_;
  int window_stage_;
  XWindow x_;
  ExpectedRecognizer rec_;
};

// Smallest template stage M in [n+1, max] with a nonempty template set that
// agrees with the one at M+1.
int stable_template_stage(const CuttingSchedule& s, int n, int witness_depth = 10, int max_stage = 10,
                          const Limits& limits = {});

}  // namespace rank1
