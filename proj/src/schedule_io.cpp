#include "rank1/schedule_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rank1/error.hpp"

namespace rank1 {
namespace {

using nlohmann::json;

RawStage stage_from_json(const json& j) {
  RawStage st;
  st.copies = j.at("q").get<std::int64_t>();
  st.spacers = j.value("spacers", std::vector<std::int64_t>{});
  return st;
}

nlohmann::ordered_json stage_to_json(const StageRule& r) {
  return nlohmann::ordered_json{{"q", r.copies}, {"spacers", r.spacers}};
}

}  // namespace

RawSchedule parse_schedule_json(const std::string& text) {
  try {
    auto j = json::parse(text);
    RawSchedule raw;
    raw.name = j.value("name", std::string("custom"));
    raw.h0 = j.value("h0", std::int64_t{1});
    for (const auto& st : j.value("stages", json::array())) raw.stages.push_back(stage_from_json(st));
    if (j.contains("tail")) {
      const auto& t = j.at("tail");
      RawTail tail;
      tail.mode = t.value("mode", std::string("repeat-last"));
      for (const auto& st : t.value("stages", json::array())) tail.cycle.push_back(stage_from_json(st));
      tail.copies = t.value("q", std::int64_t{2});
      tail.base = t.value("base", std::int64_t{0});
      tail.slope = t.value("slope", std::int64_t{0});
      raw.tail = tail;
    }
    return raw;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("schedule JSON: ") + e.what());
  }
}

RawSchedule read_schedule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open schedule file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto raw = parse_schedule_json(buf.str());
  if (raw.name == "custom") raw.name = std::filesystem::path(path).stem().string();
  return raw;
}

std::string schedule_to_json(const CuttingSchedule& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name();
  j["h0"] = s.h0();
  j["stages"] = json::array();
  for (const auto& r : s.stages()) j["stages"].push_back(stage_to_json(r));
  const auto& t = s.tail();
  switch (t.mode) {
    case TailMode::RepeatLast:
      j["tail"] = {{"mode", "repeat-last"}};
      break;
    case TailMode::Cycle: {
      nlohmann::ordered_json cyc = nlohmann::ordered_json::array();
      for (const auto& r : t.cycle) cyc.push_back(stage_to_json(r));
      j["tail"] = {{"mode", "cycle"}, {"stages", cyc}};
      break;
    }
    case TailMode::Arithmetic:
      j["tail"] = {{"mode", "arithmetic"}, {"q", t.copies}, {"base", t.base}, {"slope", t.slope}};
      break;
  }
  return j.dump();
}

CuttingSchedule load_schedule(const std::string& preset_or_path) {
  const auto& names = presets::names();
  if (std::find(names.begin(), names.end(), preset_or_path) != names.end()) {
    return presets::by_name(preset_or_path);
  }
  return validate_schedule(read_schedule_file(preset_or_path));
}

}  // namespace rank1
