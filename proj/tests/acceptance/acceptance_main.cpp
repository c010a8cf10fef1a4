// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures (capped at 1 for ctest).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "rank1/block_code.hpp"
#include "rank1/centralizer.hpp"
#include "rank1/error.hpp"
#include "rank1/language.hpp"
#include "rank1/phi.hpp"
#include "rank1/points.hpp"
#include "rank1/recognizer.hpp"
#include "rank1/schedule_io.hpp"
#include "rank1/tower.hpp"

using namespace rank1;

namespace {

// Wall-clock ceilings in seconds.
constexpr double kLimit1 = 1, kLimit2 = 1, kLimit3 = 30, kLimit4 = 60, kLimit5 = 30;
constexpr double kLimit6 = 30, kLimit7 = 10, kLimit8 = 600, kLimit9 = 1, kLimit10 = 60;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      ok = false;
      note << what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit) {
    std::ostringstream m;
    m << "took " << secs << " s, limit " << limit << " s";
    o.require(false, m.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : ": ",
              o.ok ? "" : o.note.str().c_str());
  std::fflush(stdout);
}

LanguageTable lang_of(const CuttingSchedule& s, int max_len) {
  LanguageOptions lo;
  lo.allow_repeating = true;
  return language(s, max_len, lo);
}

std::set<std::string> tables(const ProbeReport& r, bool invertible_only) {
  std::set<std::string> out;
  for (const auto& e : r.entries) {
    if (!invertible_only || !e.inverse.outputs().empty()) out.insert(e.code.outputs());
  }
  return out;
}

void check_probe(Outcome& o, const char* name, const ProbeReport& r, const oracle::BlindResult& blind,
                 std::int64_t expected_count) {
  const std::string tag = std::string(name) + ": ";
  o.require(r.invertible == expected_count, tag + "invertible " + std::to_string(r.invertible));
  o.require(r.exotic_count == 0, tag + "exotic " + std::to_string(r.exotic_count));
  o.require(r.language_preserving == static_cast<std::int64_t>(blind.preserving.size()),
            tag + "language-preserving count differs from the blind oracle");
  o.require(static_cast<std::int64_t>(blind.invertible.size()) == expected_count,
            tag + "blind oracle finds " + std::to_string(blind.invertible.size()) + " invertible");
  o.require(tables(r, true) == blind.invertible, tag + "invertible set differs from the blind oracle");
  std::set<int> shifts;
  for (const auto& e : r.entries) {
    if (e.shift) shifts.insert(*e.shift);
  }
  const int R = r.radius;
  for (int k = -R; k <= R; ++k) o.require(shifts.count(k) == 1, tag + "missing sigma^" + std::to_string(k));
}

}  // namespace

int main() {
  const auto chacon = presets::by_name("chacon");
  const auto four = presets::by_name("paper-4copy");
  const auto odo = presets::by_name("odometer2");
  const auto stair = presets::by_name("staircase");
  ProbeReport chacon_probe;

  criterion(1, "word and height fixtures", kLimit1, [&](Outcome& o) {
    o.require(heights(chacon, 5) == std::vector<std::int64_t>{1, 4, 13, 40, 121, 364}, "chacon heights");
    o.require(word(chacon, 2).bits == "0010001010010", "chacon W_2");
    o.require(heights(four, 3) == std::vector<std::int64_t>{1, 5, 21, 85}, "4-copy heights");
    o.require(word(four, 2).bits == "001000010010010000100", "4-copy W_2");
    for (const auto* s : {&chacon, &four}) {
      const auto w = oracle::words(*s, 5);
      for (int n = 0; n <= 5; ++n) o.require(word(*s, n).bits == w[n], "oracle word mismatch");
    }
  });

  criterion(2, "unexpected occurrences", kLimit2, [&](Outcome& o) {
    const auto r = unexpected_occurrences(four, 2, 1);
    o.require(r.expected == std::vector<Position>{0, 5, 11, 16}, "expected set");
    o.require(r.unexpected == std::vector<Position>{8}, "unexpected set");
    for (int m = 2; m <= 5; ++m) {
      for (int n = 1; n < m; ++n) {
        const auto q = unexpected_occurrences(four, m, n);
        o.require(!q.unexpected.empty(), "empty unexpected set m=" + std::to_string(m) + " n=" + std::to_string(n));
        o.require(q.expected == oracle::expected(four, m, n), "E-set differs from oracle");
      }
    }
  });

  criterion(3, "gap lemma over all presets", kLimit3, [&](Outcome& o) {
    std::ostringstream log;
    for (const char* name : {"chacon", "paper-4copy", "odometer2", "staircase"}) {
      const auto s = presets::by_name(name);
      std::int64_t configs = 0, violations = 0;
      for (int m = 2; m <= 6; ++m) {
        for (int n = 1; n < m; ++n) {
          const auto r = lemma_gap_check(s, m, n);
          configs += r.configurations;
          violations += r.violations;
        }
      }
      log << name << " configurations=" << configs << " violations=" << violations << "; ";
      o.require(violations == 0, std::string(name) + " has violations");
      if (std::string(name) == "paper-4copy") o.require(configs > 0, "4-copy has no configurations");
    }
    std::printf("     lemma: %s\n", log.str().c_str());
  });

  criterion(4, "context bounds and recognizer", kLimit4, [&](Outcome& o) {
    const auto lc = minimal_context(chacon, 1, 4).l;
    const auto lf = minimal_context(four, 1, 4).l;
    o.require(lc <= 30, "chacon l = " + std::to_string(lc));
    o.require(lf <= 47, "4-copy l = " + std::to_string(lf));
    o.require(lc == oracle::minimal_context(chacon, 1, 4), "chacon l differs from oracle");
    o.require(lf == oracle::minimal_context(four, 1, 4), "4-copy l differs from oracle");
    for (const auto* s : {&chacon, &four}) {
      const auto w6 = oracle::words(*s, 6);
      for (int n = 1; n <= 2; ++n) {
        const ExpectedRecognizer rec(*s, n, stable_template_stage(*s, n));
        const auto e = oracle::expected(*s, 6, n);
        std::int64_t decided = 0;
        for (auto p : oracle::find_all(w6[6], w6[n])) {
          const auto v = rec.classify(w6[6], p);
          if (v == Recognition::InsufficientContext) continue;
          ++decided;
          const bool exp = std::binary_search(e.begin(), e.end(), p);
          o.require((v == Recognition::Expected) == exp, "mismatch at " + std::to_string(p));
        }
        o.require(decided > 0, "nothing decided");
      }
    }
  });

  criterion(5, "z-window invariants", kLimit5, [&](Outcome& o) {
    for (const char* name : {"chacon", "paper-4copy", "odometer2", "staircase"}) {
      const auto r = z_window_sweep(presets::by_name(name), 6, 200, kSeed);
      o.require(r.samples == 200, std::string(name) + " sample count");
      o.require(r.gap_violations == 0 && r.aligned_violations == 0 && r.one_sided == 0,
                std::string(name) + " violations");
    }
  });

  criterion(6, "separation of interior points", kLimit6, [&](Outcome& o) {
    for (const char* name : {"chacon", "paper-4copy", "staircase"}) {
      const auto r = separation_sweep(presets::by_name(name), 6, 100, kSeed);
      o.require(r.pairs == 100, std::string(name) + " pair count");
      o.require(r.failures == 0, std::string(name) + " failures " + std::to_string(r.failures));
    }
  });

  criterion(7, "congruence claim on the staircase", kLimit7, [&](Outcome& o) {
    const auto r = psi_congruence_report(stair, parse_address("5:40"), 40, 2);
    const auto rn = return_word(stair, 2).count;
    o.require(r.modulus == rn, "modulus is not r_2");
    o.require(r.return_count >= 3 * rn, "fewer than 3 r_2 returns");
    o.require(r.constant_classes == rn - 1, "constant classes " + std::to_string(r.constant_classes));
    o.require(r.varying_classes == 1, "varying classes " + std::to_string(r.varying_classes));
  });

  criterion(8, "centralizer probe", kLimit8, [&](Outcome& o) {
    chacon_probe = centralizer_probe(chacon, 2, 24, 3);
    check_probe(o, "chacon", chacon_probe, oracle::blind_centralizer(chacon, 7, 2, 3, 24), 5);
    const auto f = centralizer_probe(four, 1, 20, 1);
    check_probe(o, "4-copy", f, oracle::blind_centralizer(four, 5, 1, 1, 20), 3);
  });

  criterion(9, "periodic control", kLimit9, [&](Outcome& o) {
    const auto s = load_schedule(std::string(RANK1_DATA_DIR) + "/period2.json");
    const auto r = centralizer_probe(s, 0, 4, 0);
    o.require(!r.in_theorem_scope, "periodic schedule reported in scope");
    bool swap = false;
    for (const auto& e : r.entries) {
      if (e.code.outputs() == "10" && !e.inverse.outputs().empty() && !e.shift) swap = true;
    }
    o.require(swap, "symbol swap is not an invertible exotic survivor");
    o.require(r.exotic_count == 1, "exotic count " + std::to_string(r.exotic_count));
  });

  criterion(10, "phi, Psi and offset pipeline", kLimit10, [&](Outcome& o) {
    const auto t = lang_of(chacon, 5);
    const ExpectedRecognizer rec(chacon, 1, stable_template_stage(chacon, 1));
    const XWindow x{word(chacon, 6).bits, 400};
    for (int k = -2; k <= 2; ++k) {
      const auto tag = "k=" + std::to_string(k) + ": ";
      const auto m = phi_map_normalized(rec, chacon, x, shift_power_code(k, 2, t));
      o.require(matching_structure_violations(m).empty(), tag + "structure");
      for (const auto& p : m.pairs) o.require(p.i - m.h < p.phi && p.phi <= p.i, tag + "bound");
      o.require(psi_conjugation_check(m, psi_of_returns(m.zx), psi_of_returns(m.zgx)).empty(), tag + "Psi");
      o.require(recover_offset(m) == k, tag + "offset");
    }
    o.require(chacon_probe.invertible == 5, "probe from criterion 8 unavailable");
    for (const auto& e : chacon_probe.entries) {
      if (e.inverse.outputs().empty() || !e.shift) continue;
      o.require(e.recovered_offset && *e.recovered_offset == *e.shift,
                "survivor sigma^" + std::to_string(*e.shift) + " recovered wrongly: " + e.offset_note);
    }
  });

  return failures == 0 ? 0 : 1;
}
