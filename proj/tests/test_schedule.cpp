#include <doctest.h>

#include "rank1/error.hpp"
#include "rank1/limits.hpp"
#include "rank1/schedule.hpp"
#include "rank1/schedule_io.hpp"

using namespace rank1;

namespace {

Errc code_of(const RawSchedule& raw) {
  try {
    validate_schedule(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("schedule unexpectedly valid");
  return Errc::InvalidArgument;
}

RawSchedule one_stage(std::int64_t q, std::vector<std::int64_t> spacers) {
  RawSchedule raw;
  raw.stages.push_back({q, std::move(spacers)});
  return raw;
}

}  // namespace

TEST_CASE("schedule validation rejects malformed stages") {
  CHECK(code_of(one_stage(1, {})) == Errc::QInvalid);
  CHECK(code_of(one_stage(3, {0})) == Errc::SpacerCountMismatch);
  CHECK(code_of(one_stage(3, {0, -1})) == Errc::SpacerInvalid);
  auto raw = one_stage(2, {0});
  raw.h0 = 0;
  CHECK(code_of(raw) == Errc::H0Invalid);
  CHECK(code_of(RawSchedule{}) == Errc::TailInvalid);  // repeat-last with nothing to repeat
  raw = one_stage(2, {0});
  raw.tail = RawTail{"spiral", {}, 2, 0, 0};
  CHECK(code_of(raw) == Errc::TailInvalid);
  raw.tail = RawTail{"cycle", {}, 2, 0, 0};
  CHECK(code_of(raw) == Errc::TailInvalid);
  raw.tail = RawTail{"arithmetic", {}, 1, 0, 0};
  CHECK(code_of(raw) == Errc::TailInvalid);
}

TEST_CASE("tail rules extend the explicit stages") {
  const auto chacon = presets::by_name("chacon");
  for (int n : {0, 1, 7, 30}) {
    CHECK(chacon.rule(n).copies == 3);
    CHECK(chacon.rule(n).spacers == std::vector<std::int64_t>{0, 1});
  }
  const auto stair = presets::by_name("staircase");
  CHECK(stair.rule(0).spacers == std::vector<std::int64_t>{1});
  CHECK(stair.rule(4).spacers == std::vector<std::int64_t>{5});

  RawSchedule raw = one_stage(2, {0});
  raw.tail = RawTail{"cycle", {{3, {1, 0}}, {2, {2}}}, 2, 0, 0};
  const auto s = validate_schedule(raw);
  CHECK(s.rule(0).copies == 2);
  CHECK(s.rule(1).copies == 3);
  CHECK(s.rule(2).spacers == std::vector<std::int64_t>{2});
  CHECK(s.rule(3).spacers == std::vector<std::int64_t>{1, 0});
  CHECK_THROWS_AS(s.rule(-1), Error);
}

TEST_CASE("presets and schedule documents round-trip") {
  for (const auto& name : presets::names()) {
    const auto s = presets::by_name(name);
    const auto text = schedule_to_json(s);
    const auto again = validate_schedule(parse_schedule_json(text));
    CHECK(again.name() == s.name());
    CHECK(again.h0() == s.h0());
    CHECK(again.stages() == s.stages());
    CHECK(again.tail() == s.tail());
    CHECK(schedule_to_json(again) == text);
  }
  CHECK_THROWS_AS(presets::by_name("nope"), Error);
}

TEST_CASE("schedule documents parse") {
  const auto raw = parse_schedule_json(R"({"h0": 2, "stages": [{"q": 3, "spacers": [1, 2]}]})");
  CHECK(raw.h0 == 2);
  REQUIRE(raw.stages.size() == 1);
  CHECK(raw.stages[0].copies == 3);
  CHECK_FALSE(raw.tail.has_value());
  try {
    parse_schedule_json("{not json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  const auto p2 = load_schedule(std::string(RANK1_DATA_DIR) + "/period2.json");
  CHECK(p2.name() == "period2");
  CHECK(p2.rule(5).spacers == std::vector<std::int64_t>{1});
}

TEST_CASE("budget strings") {
  CHECK(Limits::parse("").max_word_length == Limits{}.max_word_length);
  CHECK(Limits::parse("1234").max_word_length == 1234);
  const auto l = Limits::parse("words=10,nodes=20,stages=30");
  CHECK(l.max_word_length == 10);
  CHECK(l.max_search_nodes == 20);
  CHECK(l.max_stage == 30);
  CHECK_THROWS_AS(Limits::parse("words=-1"), Error);
  CHECK_THROWS_AS(Limits::parse("colors=3"), Error);
  CHECK_THROWS_AS(Limits::parse("x"), Error);
}
