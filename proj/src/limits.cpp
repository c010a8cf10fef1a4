#include "rank1/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "rank1/error.hpp"

namespace rank1 {
namespace {

std::int64_t parse_positive(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    fail(Errc::ParseError, "budget value must be a positive integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Limits Limits::parse(std::string_view spec) {
  Limits limits;
  if (spec.empty()) return limits;
  if (spec.find('=') == std::string_view::npos) {
    limits.max_word_length = parse_positive(spec);
    return limits;
  }
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(Errc::ParseError, "budget entry lacks '=': " + std::string(item));
    auto key = item.substr(0, eq);
    auto value = parse_positive(item.substr(eq + 1));
    if (key == "words") {
      limits.max_word_length = value;
    } else if (key == "nodes") {
      limits.max_search_nodes = value;
    } else if (key == "stages") {
      limits.max_stage = static_cast<int>(value);
    } else {
      fail(Errc::ParseError, "unknown budget key: " + std::string(key));
    }
  }
  return limits;
}

Limits Limits::from_env() {
  const char* env = std::getenv("RANK1_BUDGET");
  return env ? parse(env) : Limits{};
}

}  // namespace rank1
