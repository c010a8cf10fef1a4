#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rank1/error.hpp"
#include "rank1/tower.hpp"

using namespace rank1;

TEST_CASE("heights and words of the presets") {
  const auto chacon = presets::by_name("chacon");
  CHECK(heights(chacon, 6) == std::vector<std::int64_t>{1, 4, 13, 40, 121, 364, 1093});
  CHECK(word(chacon, 2).bits == "0010001010010");

  const auto four = presets::by_name("paper-4copy");
  CHECK(heights(four, 3) == std::vector<std::int64_t>{1, 5, 21, 85});
  CHECK(height(four, 6) == 5461);
  CHECK(word(four, 2).bits == "001000010010010000100");

  const auto stair = presets::by_name("staircase");
  CHECK(heights(stair, 7) == std::vector<std::int64_t>{1, 3, 8, 19, 42, 89, 184, 375});
  CHECK(word(stair, 1).bits == "010");
  CHECK(word(stair, 2).bits == "01011010");
  CHECK(infinite_word_prefix(stair, 8) == "01011010");

  CHECK(height(presets::by_name("odometer2"), 6) == 64);
}

TEST_CASE("words agree with literal concatenation") {
  for (const auto& name : presets::names()) {
    const auto s = presets::by_name(name);
    const auto w = oracle::words(s, 7);
    for (int n = 0; n <= 7; ++n) {
      CHECK(word(s, n).bits == w[n]);
      CHECK(height(s, n) == static_cast<std::int64_t>(w[n].size()));
    }
  }
}

TEST_CASE("expected positions agree with the copy-tracking oracle") {
  for (const auto& name : presets::names()) {
    const auto s = presets::by_name(name);
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= m; ++n) {
        const auto e = expected_positions(s, m, n);
        CHECK(e.positions == oracle::expected(s, m, n));
        const auto w = word(s, m).bits;
        const auto wn = word(s, n).bits;
        for (auto p : e.positions) CHECK(w.compare(static_cast<std::size_t>(p), wn.size(), wn) == 0);
      }
    }
  }
  CHECK(copy_offsets(presets::by_name("chacon"), 1) == std::vector<Position>{0, 4, 9});
  CHECK_THROWS_AS(expected_positions(presets::by_name("chacon"), 1, 2), Error);
}

TEST_CASE("W_n is a prefix of W_{n+1}") {
  for (const auto& name : presets::names()) {
    const auto s = presets::by_name(name);
    for (int n = 0; n < 7; ++n) {
      const auto a = word(s, n).bits;
      CHECK(word(s, n + 1).bits.compare(0, a.size(), a) == 0);
    }
  }
}

TEST_CASE("budgets and overflow are reported, never truncated") {
  Limits tight;
  tight.max_word_length = 100;
  try {
    word(presets::by_name("chacon"), 5, tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  RawSchedule raw;
  raw.stages.push_back({1000, std::vector<std::int64_t>(999, 1000)});
  const auto big = validate_schedule(raw);
  try {
    height(big, 12);
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}

TEST_CASE("gap witnesses") {
  const auto w = nonconstant_gap_witness(presets::by_name("chacon"), 1, 10);
  REQUIRE(w.has_value());
  CHECK(w->k == 2);
  CHECK(w->r != w->r_prime);
  CHECK_FALSE(nonconstant_gap_witness(presets::by_name("odometer2"), 1, 10).has_value());
  CHECK(nonconstant_gap_witness(presets::by_name("staircase"), 1, 10).has_value());
  CHECK(nonconstant_gap_witness(presets::by_name("paper-4copy"), 1, 10).has_value());
}

TEST_CASE("spacer regimes") {
  const auto c = classify(presets::by_name("chacon"), 8);
  CHECK(c.verdict == SpacerVerdict::NonRepeatingBounded);
  CHECK(c.a_max == 1);
  const auto f = classify(presets::by_name("paper-4copy"), 7);
  CHECK(f.verdict == SpacerVerdict::NonRepeatingBounded);
  const auto st = classify(presets::by_name("staircase"), 8);
  CHECK(st.verdict == SpacerVerdict::NonRepeatingUnbounded);
  CHECK(st.a_max == 8);
  CHECK_FALSE(st.growth_stages.empty());
  const auto od = classify(presets::by_name("odometer2"), 8);
  CHECK(od.verdict == SpacerVerdict::RepeatingConsistent);
  REQUIRE(od.period.has_value());
  CHECK(*od.period == 1);
}

TEST_CASE("minimal period matches a naive scan") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto len = 1 + rng() % 40;
    const auto alphabet = 1 + rng() % 2;
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>('0' + rng() % alphabet));
    if (rng() % 3 == 0) w = (w.substr(0, 1 + len / 4) + w + w).substr(0, len);  // bias toward periodic words
    std::int64_t naive = static_cast<std::int64_t>(w.size());
    for (std::size_t p = 1; p < w.size(); ++p) {
      bool ok = true;
      for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
      if (ok) {
        naive = static_cast<std::int64_t>(p);
        break;
      }
    }
    CHECK(minimal_period(w) == naive);
  }
}
