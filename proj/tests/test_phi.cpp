#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rank1/centralizer.hpp"
#include "rank1/error.hpp"
#include "rank1/phi.hpp"

using namespace rank1;

namespace {

LanguageTable lang_of(const CuttingSchedule& s, int max_len) {
  LanguageOptions lo;
  lo.allow_repeating = true;
  return language(s, max_len, lo);
}

// Stage-1 returns of x (window W_6, origin 400) read straight from E_{6,1}.
std::vector<std::int64_t> returns_of(const CuttingSchedule& s, std::int64_t shift) {
  std::vector<std::int64_t> out;
  for (auto e : oracle::expected(s, 6, 1)) out.push_back(e - 400 - shift);
  return out;
}

}  // namespace

TEST_CASE("phi for shifts on a Chacon window") {
  const auto s = presets::by_name("chacon");
  const auto t = lang_of(s, 5);
  const ExpectedRecognizer rec(s, 1, 7);
  const XWindow x{word(s, 6).bits, 400};

  const auto id = phi_map(rec, s, x, shift_power_code(0, 2, t));
  CHECK_FALSE(id.pairs.empty());
  for (const auto& p : id.pairs) CHECK(p.phi == p.i);
  CHECK(recover_offset(id) == 0);

  const auto one = phi_map(rec, s, x, shift_power_code(1, 2, t));
  for (const auto& p : one.pairs) CHECK(p.phi == p.i - 1);
  CHECK(recover_offset(one) == 1);
  CHECK(matching_structure_violations(one).empty());

  // Z(x) is read from the E-set directly; every decided return appears.
  const auto z = returns_of(s, 0);
  for (auto i : id.zx) CHECK(std::binary_search(z.begin(), z.end(), i));
  // sigma^1 moves the returns one step left.
  for (auto j : one.zgx) CHECK(std::binary_search(z.begin(), z.end(), j + 1));

  // sigma^-1 puts the partner of i at i + 1, outside (i - h_1, i].
  try {
    phi_map(rec, s, x, shift_power_code(-1, 2, t));
    FAIL("expected NormalizationRequired");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NormalizationRequired);
  }
  // sigma^2 lands on a spacer level of W_1 after gaps of five.
  CHECK_THROWS_AS(phi_map(rec, s, x, shift_power_code(2, 2, t)), Error);

  for (int k = -2; k <= 2; ++k) {
    const auto pm = phi_map_normalized(rec, s, x, shift_power_code(k, 2, t));
    CHECK(recover_offset(pm) == k);
    CHECK(matching_structure_violations(pm).empty());
    CHECK(psi_conjugation_check(pm, psi_of_returns(pm.zx), psi_of_returns(pm.zgx)).empty());
  }
}

TEST_CASE("base stage with h_0 <= a_max can give uneven offsets") {
  // Chacon has h_0 = 1 = a_max. sigma^-4 sends B_1 into B_0 yet its matching
  // has offsets 0 and 1, so Psi conjugation fails at stage 1.
  const auto s = presets::by_name("chacon");
  const auto t = lang_of(s, 9);
  const ExpectedRecognizer rec(s, 1, 7);
  const XWindow x{word(s, 6).bits, 400};
  const auto pm = phi_map(rec, s, x, shift_power_code(-4, 4, t));
  CHECK_FALSE(pm.recovered_offset.has_value());
  try {
    recover_offset(pm);
    FAIL("expected OffsetsInconsistent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OffsetsInconsistent);
  }
  CHECK_FALSE(psi_conjugation_check(pm, psi_of_returns(pm.zx), psi_of_returns(pm.zgx)).empty());

  // Dropping the first stage (returns to B_2, h_1 = 4 > a_max) restores it.
  CHECK(recovery_stage(s) == 2);
  const ExpectedRecognizer rec2(s, 2, 7);
  const auto pm2 = phi_map_normalized(rec2, s, x, shift_power_code(-4, 4, t));
  CHECK(recover_offset(pm2) == -4);
  CHECK(psi_conjugation_check(pm2, psi_of_returns(pm2.zx), psi_of_returns(pm2.zgx)).empty());
}

TEST_CASE("matching structure on every stage and preset") {
  for (const char* name : {"chacon", "paper-4copy", "staircase"}) {
    const auto s = presets::by_name(name);
    const OffsetRecovery rec(s);
    const auto t = lang_of(s, 7);
    for (int k = -3; k <= 3; ++k) {
      INFO(name << " k=" << k);
      const auto r = rec.recover(shift_power_code(k, 3, t));
      CHECK(r.offset == k);
      CHECK(r.psi_violations.empty());
      const auto& m = r.matching;
      CHECK(matching_structure_violations(m).empty());
      for (const auto& p : m.pairs) {
        CHECK(p.i - m.h < p.phi);
        CHECK(p.phi <= p.i);
      }
    }
  }
}

TEST_CASE("structure checks catch broken matchings") {
  PhiMatching m;
  m.h = 4;
  m.zgx = {0, 4, 9};
  m.pairs = {{1, 0}, {9, 9}};
  m.offsets = {1, 0};
  const auto v = matching_structure_violations(m);
  CHECK(v.size() == 1);  // 4 has no preimage
  m.pairs = {{1, 0}, {5, 0}};
  CHECK_FALSE(matching_structure_violations(m).empty());
  m.pairs = {{8, 0}};
  CHECK_FALSE(matching_structure_violations(m).empty());
  CHECK_THROWS_AS(recover_offset(PhiMatching{}), Error);
  PhiMatching one;
  one.pairs = {{0, 0}};
  CHECK_THROWS_AS(psi_conjugation_check(one, {}, {}), Error);
}

TEST_CASE("short windows report insufficient context") {
  const auto s = presets::by_name("chacon");
  const auto t = lang_of(s, 3);
  const ExpectedRecognizer rec(s, 1, 7);
  try {
    phi_map(rec, s, XWindow{word(s, 3).bits, 5}, shift_power_code(0, 1, t));
    FAIL("expected InsufficientContext");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsufficientContext);
  }
}
