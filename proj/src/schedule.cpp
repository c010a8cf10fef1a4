#include "rank1/schedule.hpp"

#include <string>

#include "rank1/error.hpp"

namespace rank1 {
namespace {

StageRule validate_stage(const RawStage& raw, const std::string& where) {
  if (raw.copies < 2) {
    fail(Errc::QInvalid, where + ": copy count " + std::to_string(raw.copies) + " < 2");
  }
  if (raw.copies > 1'000'000) fail(Errc::QInvalid, where + ": copy count too large");
  if (static_cast<std::int64_t>(raw.spacers.size()) != raw.copies - 1) {
    fail(Errc::SpacerCountMismatch, where + ": " + std::to_string(raw.spacers.size()) +
                                        " spacer entries for " + std::to_string(raw.copies) +
                                        " copies (expected " + std::to_string(raw.copies - 1) + ")");
  }
  for (auto a : raw.spacers) {
    if (a < 0) fail(Errc::SpacerInvalid, where + ": negative spacer count");
  }
  return StageRule{static_cast<int>(raw.copies), raw.spacers};
}

}  // namespace

std::int64_t StageRule::spacer_total() const {
  std::int64_t total = 0;
  for (auto a : spacers) {
    if (__builtin_add_overflow(total, a, &total)) fail(Errc::Overflow, "spacer total overflows");
  }
  return total;
}

StageRule CuttingSchedule::rule(int n) const {
  if (n < 0) fail(Errc::InvalidArgument, "negative stage index");
  auto idx = static_cast<std::size_t>(n);
  if (idx < stages_.size()) return stages_[idx];
  switch (tail_.mode) {
    case TailMode::RepeatLast:
      return stages_.back();
    case TailMode::Cycle:
      return tail_.cycle[(idx - stages_.size()) % tail_.cycle.size()];
    case TailMode::Arithmetic: {
      std::int64_t spacer = 0;
      if (__builtin_mul_overflow(tail_.slope, static_cast<std::int64_t>(n), &spacer) ||
          __builtin_add_overflow(spacer, tail_.base, &spacer)) {
        fail(Errc::Overflow, "arithmetic spacer overflows at stage " + std::to_string(n));
      }
      return StageRule{tail_.copies, std::vector<std::int64_t>(tail_.copies - 1, spacer)};
    }
  }
  fail(Errc::TailInvalid, "unknown tail mode");
}

CuttingSchedule validate_schedule(const RawSchedule& raw) {
  if (raw.h0 < 1) fail(Errc::H0Invalid, "h0 = " + std::to_string(raw.h0) + " must be >= 1");

  CuttingSchedule s;
  s.name_ = raw.name;
  s.h0_ = raw.h0;
  for (std::size_t i = 0; i < raw.stages.size(); ++i) {
    s.stages_.push_back(validate_stage(raw.stages[i], "stage " + std::to_string(i)));
  }

  RawTail tail = raw.tail.value_or(RawTail{});
  if (tail.mode == "repeat-last") {
    if (s.stages_.empty()) fail(Errc::TailInvalid, "repeat-last tail needs at least one explicit stage");
    s.tail_.mode = TailMode::RepeatLast;
  } else if (tail.mode == "cycle") {
    if (tail.cycle.empty()) fail(Errc::TailInvalid, "cycle tail needs at least one stage");
    s.tail_.mode = TailMode::Cycle;
    for (std::size_t i = 0; i < tail.cycle.size(); ++i) {
      try {
        s.tail_.cycle.push_back(validate_stage(tail.cycle[i], "cycle entry " + std::to_string(i)));
      } catch (const Error& e) {
        fail(Errc::TailInvalid, e.what());
      }
    }
  } else if (tail.mode == "arithmetic") {
    if (tail.copies < 2 || tail.copies > 1'000'000) {
      fail(Errc::TailInvalid, "arithmetic tail copy count must be >= 2");
    }
    if (tail.base < 0 || tail.slope < 0) {
      fail(Errc::TailInvalid, "arithmetic tail base and slope must be nonnegative");
    }
    s.tail_.mode = TailMode::Arithmetic;
    s.tail_.copies = static_cast<int>(tail.copies);
    s.tail_.base = tail.base;
    s.tail_.slope = tail.slope;
  } else {
    fail(Errc::TailInvalid, "unknown tail mode '" + tail.mode + "'");
  }
  return s;
}

namespace presets {

RawSchedule chacon() { return RawSchedule{"chacon", 1, {RawStage{3, {0, 1}}}, RawTail{}}; }

RawSchedule paper_4copy() {
  return RawSchedule{"paper-4copy", 1, {RawStage{4, {0, 1, 0}}}, RawTail{}};
}

RawSchedule odometer2() { return RawSchedule{"odometer2", 1, {RawStage{2, {0}}}, RawTail{}}; }

RawSchedule staircase() {
  RawTail tail;
  tail.mode = "arithmetic";
  tail.copies = 2;
  tail.base = 1;
  tail.slope = 1;
  return RawSchedule{"staircase", 1, {}, tail};
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"chacon", "paper-4copy", "odometer2", "staircase"};
  return all;
}

CuttingSchedule by_name(const std::string& name) {
  if (name == "chacon") return validate_schedule(chacon());
  if (name == "paper-4copy") return validate_schedule(paper_4copy());
  if (name == "odometer2") return validate_schedule(odometer2());
  if (name == "staircase") return validate_schedule(staircase());
  fail(Errc::InvalidArgument, "unknown preset '" + name + "'");
}

}  // namespace presets

}  // namespace rank1
