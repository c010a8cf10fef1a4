#include <doctest.h>

#include <set>

#include "rank1/block_code.hpp"
#include "rank1/centralizer.hpp"
#include "rank1/error.hpp"
#include "rank1/schedule_io.hpp"

using namespace rank1;

namespace {

LanguageTable lang_of(const CuttingSchedule& s, int max_len) {
  LanguageOptions lo;
  lo.allow_repeating = true;
  return language(s, max_len, lo);
}

bool preserves(const BlockCode& c, const LanguageTable& t, int L) {
  for (const auto& w : t.factors(L)) {
    if (!t.contains(apply_code(c, w))) return false;
  }
  return true;
}

// Every table over the (2R+1)-factors, filtered by language preservation.
std::set<std::string> blind_enumeration(const LanguageTable& t, int R, int L) {
  const auto dom = t.factors(2 * R + 1);
  std::set<std::string> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dom.size()); ++bits) {
    std::string table;
    for (std::size_t i = 0; i < dom.size(); ++i) table.push_back((bits >> i) & 1 ? '1' : '0');
    if (preserves(BlockCode(R, dom, table), t, L)) out.insert(table);
  }
  return out;
}

// Blind search for an inverse of radius <= Rp.
bool blind_invertible(const BlockCode& g, const LanguageTable& t, int Rp, int L) {
  for (int r = 0; r <= Rp; ++r) {
    const auto dom = t.factors(2 * r + 1);
    const auto trim = static_cast<std::size_t>(g.radius() + r);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dom.size()); ++bits) {
      std::string table;
      for (std::size_t i = 0; i < dom.size(); ++i) table.push_back((bits >> i) & 1 ? '1' : '0');
      const BlockCode h(r, dom, table);
      bool ok = preserves(h, t, L);
      for (const auto& w : t.factors(L)) {
        if (!ok) break;
        const auto id = w.substr(trim, w.size() - 2 * trim);
        ok = apply_code(h, apply_code(g, w)) == id && apply_code(g, apply_code(h, w)) == id;
      }
      if (ok) return true;
    }
  }
  return false;
}

std::set<std::string> tables(const std::vector<BlockCode>& codes) {
  std::set<std::string> out;
  for (const auto& c : codes) out.insert(c.outputs());
  return out;
}

}  // namespace

TEST_CASE("pruned enumeration equals blind enumeration") {
  struct Case {
    const char* name;
    int R, L;
  };
  for (auto c : {Case{"chacon", 1, 16}, Case{"chacon", 2, 24}, Case{"paper-4copy", 1, 20}, Case{"staircase", 1, 12}}) {
    INFO(c.name << " R=" << c.R);
    const auto s = presets::by_name(c.name);
    const auto t = lang_of(s, c.L);
    const auto codes = enumerate_codes(t, c.R, c.L);
    CHECK(tables(codes) == blind_enumeration(t, c.R, c.L));
    for (int k = -c.R; k <= c.R; ++k) CHECK(tables(codes).count(shift_power_code(k, c.R, t).outputs()) == 1);
    CHECK(std::is_sorted(codes.begin(), codes.end()));
  }
}

TEST_CASE("enumeration does not depend on the worker count") {
  const auto t = lang_of(presets::by_name("chacon"), 32);
  EnumerationStats one, many;
  const auto a = enumerate_codes(t, 3, 32, {}, &one, 1);
  const auto b = enumerate_codes(t, 3, 32, {}, &many, 7);
  CHECK(a == b);
  CHECK(one.nodes_visited == many.nodes_visited);
  CHECK(one.table_slots == 13);
}

TEST_CASE("enumeration budget") {
  const auto t = lang_of(presets::by_name("chacon"), 24);
  Limits tight;
  tight.max_search_nodes = 5;
  try {
    enumerate_codes(t, 2, 24, tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  CHECK_THROWS_AS(enumerate_codes(t, 2, 4), Error);
}

TEST_CASE("constructed inverses agree with a blind inverse search") {
  struct Case {
    const char* name;
    int R, Rp, L;
  };
  for (auto c : {Case{"chacon", 1, 2, 16}, Case{"chacon", 2, 3, 24}, Case{"paper-4copy", 1, 2, 20},
                 Case{"staircase", 1, 2, 12}}) {
    INFO(c.name << " R=" << c.R);
    const auto s = presets::by_name(c.name);
    const auto t = lang_of(s, std::max(c.L, 2 * (c.R + c.Rp) + 1));
    const auto codes = enumerate_codes(t, c.R, c.L);
    const auto inv = invertible_codes(codes, t, c.Rp, c.L);
    std::set<std::string> got;
    for (const auto& ic : inv) got.insert(ic.code.outputs());
    std::set<std::string> want;
    for (const auto& g : codes) {
      if (blind_invertible(g, t, c.Rp, c.L)) want.insert(g.outputs());
    }
    CHECK(got == want);
    for (const auto& ic : inv) {
      const auto powers = matching_shift_powers(ic.code, t);
      REQUIRE(powers.size() == 1);
      CHECK(matching_shift_powers(ic.inverse, t) == std::vector<int>{-powers[0]});
    }
  }
}

TEST_CASE("constant codes are not invertible") {
  const auto s = presets::by_name("staircase");
  const auto t = lang_of(s, 12);
  const BlockCode ones(1, t.factors(3), std::string(t.factors(3).size(), '1'));
  CHECK(preserves(ones, t, 12));
  CHECK_FALSE(find_inverse(ones, t, 2, 12).has_value());
}

TEST_CASE("probe fixtures") {
  const auto chacon = centralizer_probe(presets::by_name("chacon"), 2, 24, 3);
  CHECK(chacon.in_theorem_scope);
  CHECK(chacon.invertible == 5);
  CHECK(chacon.exotic_count == 0);
  std::set<int> powers;
  for (const auto& e : chacon.entries) {
    REQUIRE(e.shift.has_value());
    powers.insert(*e.shift);
    CHECK(e.recovered_offset == std::optional<std::int64_t>(*e.shift));
  }
  CHECK(powers == std::set<int>{-2, -1, 0, 1, 2});

  const auto four = centralizer_probe(presets::by_name("paper-4copy"), 1, 20, 2);
  CHECK(four.invertible == 3);
  CHECK(four.exotic_count == 0);

  const auto odo = centralizer_probe(presets::by_name("odometer2"), 1, 8, 2);
  CHECK_FALSE(odo.in_theorem_scope);

  const auto p2 = centralizer_probe(load_schedule(std::string(RANK1_DATA_DIR) + "/period2.json"), 0, 4, 1);
  CHECK_FALSE(p2.in_theorem_scope);
  CHECK(p2.invertible == 2);
  CHECK(p2.exotic_count == 1);
  bool swap_found = false;
  for (const auto& e : p2.entries) swap_found |= !e.shift && e.code.outputs() == "10";
  CHECK(swap_found);
}

TEST_CASE("probe rejects bad parameters") {
  const auto s = presets::by_name("chacon");
  CHECK_THROWS_AS(centralizer_probe(s, 2, 24, 1), Error);
  CHECK_THROWS_AS(centralizer_probe(s, 2, 6, 3), Error);
  CHECK(default_test_length(s, 2) == std::max(2 * 2 + 2 * 30, 3 * 13));
}
