#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rank1 {

// One cutting step: `copies` copies of the current tower are stacked with
// spacers[i] spacer levels between copy i and copy i+1.
struct StageRule {
  int copies = 2;
  std::vector<std::int64_t> spacers;

  std::int64_t spacer_total() const;
  friend bool operator==(const StageRule&, const StageRule&) = default;
};

enum class TailMode { RepeatLast, Cycle, Arithmetic };

// How stage rules continue past the explicit list.
//  RepeatLast: the last explicit rule forever.
//  Cycle:      the rules in `cycle`, repeated.
//  Arithmetic: `copies` copies, every spacer equal to base + slope * n
//              where n is the absolute stage index.
struct TailRule {
  TailMode mode = TailMode::RepeatLast;
  std::vector<StageRule> cycle;
  int copies = 2;
  std::int64_t base = 0;
  std::int64_t slope = 0;

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

// Unvalidated description, as read from JSON or built by hand.
struct RawStage {
  std::int64_t copies = 0;
  std::vector<std::int64_t> spacers;
};

struct RawTail {
  std::string mode = "repeat-last";
  std::vector<RawStage> cycle;
  std::int64_t copies = 2;
  std::int64_t base = 0;
  std::int64_t slope = 0;
};

struct RawSchedule {
  std::string name = "custom";
  std::int64_t h0 = 1;
  std::vector<RawStage> stages;
  std::optional<RawTail> tail;
};

// A validated cutting-and-stacking schedule. Immutable; rule(n) is total.
class CuttingSchedule {
 public:
  const std::string& name() const { return name_; }
  std::int64_t h0() const { return h0_; }
  const std::vector<StageRule>& stages() const { return stages_; }
  const TailRule& tail() const { return tail_; }

  // Rule applied to go from stage n to stage n+1.
  StageRule rule(int n) const;

  friend CuttingSchedule validate_schedule(const RawSchedule& raw);

 private:
  CuttingSchedule() = default;

  std::string name_;
  std::int64_t h0_ = 1;
  std::vector<StageRule> stages_;
  TailRule tail_;
};

CuttingSchedule validate_schedule(const RawSchedule& raw);

namespace presets {

RawSchedule chacon();
RawSchedule paper_4copy();
RawSchedule odometer2();
RawSchedule staircase();

// Names accepted by by_name(): chacon, paper-4copy, odometer2, staircase.
const std::vector<std::string>& names();
CuttingSchedule by_name(const std::string& name);

}  // namespace presets

}  // namespace rank1
