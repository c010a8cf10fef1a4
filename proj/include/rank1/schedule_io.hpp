#pragma once

#include <string>

#include "rank1/schedule.hpp"

namespace rank1 {

// Schedule documents:
//   {"h0": 1, "stages": [{"q": 3, "spacers": [0, 1]}],
//    "tail": {"mode": "repeat-last"}}
// Tail variants: {"mode": "cycle", "stages": [...]} and
// {"mode": "arithmetic", "q": 2, "base": 1, "slope": 1}.
RawSchedule parse_schedule_json(const std::string& text);
RawSchedule read_schedule_file(const std::string& path);
std::string schedule_to_json(const CuttingSchedule& s);

// A preset name or a path to a schedule document.
CuttingSchedule load_schedule(const std::string& preset_or_path);

}  // namespace rank1
