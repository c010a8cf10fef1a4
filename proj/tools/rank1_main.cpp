#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rank1/centralizer.hpp"
#include "rank1/error.hpp"
#include "rank1/phi.hpp"
#include "rank1/report_json.hpp"
#include "rank1/schedule_io.hpp"

namespace {

using namespace rank1;
using report::Json;

constexpr int kExitUsage = 64;
constexpr int kExitError = 1;
constexpr int kExitExotic = 2;
constexpr std::uint64_t kDefaultSeed = 20240611;

struct Common {
  std::string schedule;
  bool json = false;
  std::int64_t max_word = 0;
  std::int64_t max_nodes = 0;
  int max_stage = 0;
};

struct Cli {
  Common common;
  std::function<int()> action;
};

void add_common(CLI::App* sub, Common& c, bool needs_schedule = true) {
  auto* opt = sub->add_option("--schedule,--preset", c.schedule, "Preset name or schedule JSON file");
  if (needs_schedule) opt->required();
  sub->add_flag("--json", c.json, "Emit one JSON document");
  sub->add_option("--max-word", c.max_word, "Budget: longest word materialized")->check(CLI::PositiveNumber);
  sub->add_option("--max-nodes", c.max_nodes, "Budget: search nodes")->check(CLI::PositiveNumber);
  sub->add_option("--max-stage", c.max_stage, "Budget: highest stage")->check(CLI::PositiveNumber);
}

Limits limits_of(const Common& c) {
  auto l = Limits::from_env();
  if (c.max_word > 0) l.max_word_length = c.max_word;
  if (c.max_nodes > 0) l.max_search_nodes = c.max_nodes;
  if (c.max_stage > 0) l.max_stage = c.max_stage;
  return l;
}

int emit(const Common& c, Json doc, const std::function<void(std::ostream&)>& text) {
  if (c.json) {
    std::cout << report::dump(doc);
  } else {
    text(std::cout);
  }
  return 0;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

// Subcommands. Each help string names the statement it exercises.

void tower_commands(CLI::App& app, Cli& cli) {
  auto& c = cli.common;

  auto* validate = app.add_subcommand("validate", "Check a cutting schedule: q_n >= 2, q_n - 1 nonnegative spacer counts, h_0 >= 1");
  add_common(validate, c);
  validate->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      auto doc = report::document("schedule");
      doc["schedule"] = Json::parse(schedule_to_json(s));
      return emit(c, doc, [&](std::ostream& os) { os << "ok " << s.name() << "\n"; });
    };
  });

  static int stage = 0;
  static bool all = false;
  auto* h = app.add_subcommand("height", "Height recursion h_{n+1} = q_n h_n + (spacers added at stage n)");
  add_common(h, c);
  h->add_option("--stage", stage, "Stage n")->required()->check(CLI::NonNegativeNumber);
  h->add_flag("--all", all, "Print h_0 .. h_n");
  h->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto hs = heights(s, stage);
      auto doc = report::document("heights");
      doc["stage"] = stage;
      doc["heights"] = all ? Json(hs) : Json(std::vector<std::int64_t>{hs.back()});
      return emit(c, doc, [&](std::ostream& os) {
        if (all) {
          for (std::size_t n = 0; n < hs.size(); ++n) os << n << " " << hs[n] << "\n";
        } else {
          os << hs.back() << "\n";
        }
      });
    };
  });

  auto* w = app.add_subcommand("word", "Tower word W_{n+1} = W_n 1^{a_1} W_n ... 1^{a_{q-1}} W_n (1 marks a spacer level)");
  add_common(w, c);
  w->add_option("--stage", stage, "Stage n")->required()->check(CLI::NonNegativeNumber);
  w->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto tw = word(s, stage, limits_of(c));
      auto doc = report::document("word");
      doc["stage"] = stage;
      doc["length"] = tw.length();
      doc["word"] = tw.bits;
      return emit(c, doc, [&](std::ostream& os) { os << tw.bits << "\n"; });
    };
  });

  static int m = 0, n = 0;
  auto* e = app.add_subcommand("expected", "Expected occurrences E_{m,n}: levels of the stage-m tower lying in B_n");
  add_common(e, c);
  e->add_option("--m", m, "Outer stage m")->required()->check(CLI::NonNegativeNumber);
  e->add_option("--n", n, "Inner stage n <= m")->required()->check(CLI::NonNegativeNumber);
  e->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto es = expected_positions(s, m, n, limits_of(c));
      auto doc = report::document("expected");
      doc["m"] = m;
      doc["n"] = n;
      doc["positions"] = es.positions;
      return emit(c, doc, [&](std::ostream& os) { os << join(es.positions) << "\n"; });
    };
  });

  static std::int64_t length = 0;
  auto* p = app.add_subcommand("prefix", "Prefix of W_infinity, the common extension of all W_n");
  add_common(p, c);
  p->add_option("--length", length, "Prefix length")->required()->check(CLI::NonNegativeNumber);
  p->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto pre = infinite_word_prefix(s, length, limits_of(c));
      auto doc = report::document("prefix");
      doc["length"] = length;
      doc["prefix"] = pre;
      return emit(c, doc, [&](std::ostream& os) { os << pre << "\n"; });
    };
  });

  static int depth = 10;
  auto* cl = app.add_subcommand("classify", "Spacer regimes: repeating, non-repeating with bounded runs, non-repeating with unbounded runs (depth-qualified evidence)");
  add_common(cl, c);
  cl->add_option("--depth", depth, "Deepest stage examined")->check(CLI::Range(2, 64));
  cl->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = classify(s, depth, limits_of(c));
      auto doc = report::document("classification");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) {
        os << "verdict " << verdict_name(r.verdict) << "\n";
        os << "depth " << r.depth << "\n";
        os << "a_max " << r.a_max << "\n";
        if (r.period) os << "period " << *r.period << "\n";
        if (r.witness) os << "witness n=" << r.witness->n << " k=" << r.witness->k << "\n";
        if (!r.growth_stages.empty()) os << "growth_stages " << join(r.growth_stages) << "\n";
      });
    };
  });

  auto* wit = app.add_subcommand("witness", "Non-repeating evidence: expected W_n occurrences in some W_k separated by two different spacer counts");
  add_common(wit, c);
  wit->add_option("--n", n, "Stage n")->required()->check(CLI::NonNegativeNumber);
  wit->add_option("--depth", depth, "Search horizon")->check(CLI::Range(1, 64));
  wit->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = nonconstant_gap_witness(s, n, depth, limits_of(c));
      auto doc = report::document("witness");
      doc["witness"] = r ? report::to_json(*r) : Json(nullptr);
      return emit(c, doc, [&](std::ostream& os) {
        if (r) {
          os << "n " << r->n << " k " << r->k << " r " << r->r << " r' " << r->r_prime << "\n";
        } else {
          os << "none within depth " << depth << "\n";
        }
      });
    };
  });
}

void recognizer_commands(CLI::App& app, Cli& cli) {
  auto& c = cli.common;
  static int m = 0, n = 0, depth = 10, horizon = 4, template_stage = 0;

  auto* occ = app.add_subcommand("occurrences", "Unexpected occurrences: W_n occurs in W_m outside E_{m,n}");
  add_common(occ, c);
  occ->add_option("--m", m, "Outer stage")->required()->check(CLI::NonNegativeNumber);
  occ->add_option("--n", n, "Inner stage")->required()->check(CLI::NonNegativeNumber);
  occ->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = unexpected_occurrences(s, m, n, limits_of(c));
      auto doc = report::document("occurrences");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) {
        os << "expected " << join(r.expected) << "\n";
        os << "unexpected " << join(r.unexpected) << "\n";
      });
    };
  });

  auto* cb = app.add_subcommand("context-bound", "Context length l = 2 h_k + h_n that separates expected from unexpected W_n occurrences");
  add_common(cb, c);
  cb->add_option("--n", n, "Stage n")->required()->check(CLI::NonNegativeNumber);
  cb->add_option("--depth", depth, "Witness search horizon")->check(CLI::Range(1, 64));
  cb->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = context_bound(s, n, depth, limits_of(c));
      auto doc = report::document("context_bound");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) { os << r.l << "\n"; });
    };
  });

  auto* mc = app.add_subcommand("minimal-context", "Smallest context length that decides expected W_n occurrences inside W_m for all m <= M");
  add_common(mc, c);
  mc->add_option("--n", n, "Stage n")->required()->check(CLI::NonNegativeNumber);
  mc->add_option("--horizon", horizon, "Stage M > n")->check(CLI::Range(1, 64));
  mc->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = minimal_context(s, n, horizon, limits_of(c));
      auto doc = report::document("context_bound");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) { os << r.l << "\n"; });
    };
  });

  static std::string text;
  static int in_stage = -1;
  static std::int64_t position = -1;
  auto* rec = app.add_subcommand("recognize", "Recognition of expected occurrences from l(n) symbols of right context");
  add_common(rec, c);
  rec->add_option("--n", n, "Stage of the recognized word")->required()->check(CLI::NonNegativeNumber);
  rec->add_option("--template-stage", template_stage, "Stage M the templates are read from (default n + 3)");
  auto* src_text = rec->add_option("--text", text, "Word over {0,1} to scan");
  rec->add_option("--in-stage", in_stage, "Scan W_m instead of --text")->excludes(src_text);
  rec->add_option("--position", position, "Classify one occurrence start");
  rec->add_option("--depth", depth, "Witness search horizon")->check(CLI::Range(1, 64));
  rec->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto lim = limits_of(c);
      const std::string w = in_stage >= 0 ? word(s, in_stage, lim).bits : text;
      if (w.empty()) fail(Errc::InvalidArgument, "give --text or --in-stage");
      const ExpectedRecognizer r(s, n, template_stage > 0 ? template_stage : n + 3, depth, lim);
      auto doc = report::document("recognition");
      doc["n"] = n;
      doc["context_length"] = r.context_length();
      doc["template_stage"] = r.template_stage();
      doc["stable"] = r.stable();
      if (position >= 0) {
        const auto verdict = r.classify(w, position);
        doc["position"] = position;
        doc["verdict"] = recognition_name(verdict);
        return emit(c, doc, [&](std::ostream& os) { os << recognition_name(verdict) << "\n"; });
      }
      const auto starts = r.expected_starts(w);
      doc["decided_end"] = r.decided_end(w);
      doc["expected"] = starts;
      return emit(c, doc, [&](std::ostream& os) {
        os << "decided_end " << r.decided_end(w) << "\n";
        os << "expected " << join(starts) << "\n";
      });
    };
  });

  auto* lem = app.add_subcommand("lemma", "Gap lemma: an occurrence of W_n overlapping an expected one is followed by the same spacer run");
  add_common(lem, c);
  lem->add_option("--m", m, "Outer stage")->required()->check(CLI::NonNegativeNumber);
  lem->add_option("--n", n, "Inner stage")->required()->check(CLI::NonNegativeNumber);
  lem->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = lemma_gap_check(s, m, n, limits_of(c));
      auto doc = report::document("lemma");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) {
        os << "configurations " << r.configurations << "\n";
        os << "violations " << r.violations << "\n";
      });
    };
  });
}

void point_commands(CLI::App& app, Cli& cli) {
  auto& c = cli.common;
  auto* point = app.add_subcommand("point", "Points seen through the towers: location, margins, return sets Z(x) and the gap function Psi");
  point->require_subcommand(1);

  static std::string address, other;
  static int n = 1, copy = 0, depth = 6, horizon = 6;
  static std::int64_t radius = -1;
  static std::size_t count = 200;
  static std::uint64_t seed = kDefaultSeed;
  static bool maximal = false;

  auto* loc = point->add_subcommand("locate", "Level of the stage-n tower holding the point, or the stage-n leftover");
  add_common(loc, c);
  loc->add_option("--address", address, "depth:level")->required();
  loc->add_option("--stage", n, "Stage n <= depth")->required()->check(CLI::NonNegativeNumber);
  loc->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto l = locate(s, parse_address(address), n, limits_of(c));
      auto doc = report::document("location");
      doc.update(report::to_json(l));
      return emit(c, doc, [&](std::ostream& os) { os << format_location(l) << "\n"; });
    };
  });

  auto* ext = point->add_subcommand("extend", "Descend into a copy of the stage-depth tower inside the next stage");
  add_common(ext, c);
  ext->add_option("--address", address, "depth:level")->required();
  ext->add_option("--copy", copy, "Copy index in [0, q)")->required()->check(CLI::NonNegativeNumber);
  ext->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto a = extend(s, parse_address(address), copy);
      auto doc = report::document("address");
      doc["address"] = format_address(a);
      return emit(c, doc, [&](std::ostream& os) { os << format_address(a) << "\n"; });
    };
  });

  auto* mar = point->add_subcommand("margins", "Distance from the point to the bottom and top of each tower (interior points)");
  add_common(mar, c);
  mar->add_option("--address", address, "depth:level")->required();
  mar->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto mg = interior_margin(s, parse_address(address), limits_of(c));
      auto doc = report::document("margins");
      doc.update(report::to_json(mg));
      return emit(c, doc, [&](std::ostream& os) {
        os << "down " << mg.at_depth.down << " up " << mg.at_depth.up << "\n";
        for (std::size_t k = 0; k < mg.per_stage.size(); ++k) {
          const auto& st = mg.per_stage[k];
          os << "stage " << k << " ";
          if (st) {
            os << "down " << st->down << " up " << st->up << "\n";
          } else {
            os << "spacer\n";
          }
        }
      });
    };
  });

  auto* zw = point->add_subcommand("zwindow", "Returns of the point to B_1 within a finite window (a finite piece of Z(x))");
  add_common(zw, c);
  zw->add_option("--address", address, "depth:level")->required();
  auto* r_opt = zw->add_option("--radius", radius, "Symmetric radius T")->check(CLI::NonNegativeNumber);
  zw->add_flag("--max", maximal, "Largest window inside the tower")->excludes(r_opt);
  zw->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto a = parse_address(address);
      if (!maximal && radius < 0) fail(Errc::InvalidArgument, "give --radius or --max");
      const auto win = maximal ? maximal_z_window(s, a, limits_of(c)) : z_window(s, a, radius, limits_of(c));
      auto doc = report::document("zwindow");
      doc.update(report::to_json(win));
      return emit(c, doc, [&](std::ostream& os) {
        os << "window -" << win.before << " " << win.after << "\n";
        os << "returns " << join(win.returns) << "\n";
      });
    };
  });

  auto* ps = point->add_subcommand("psi", "Gap function Psi_x(i): distance from a return to the next one");
  add_common(ps, c);
  ps->add_option("--address", address, "depth:level")->required();
  ps->add_option("--radius", radius, "Symmetric radius T")->required()->check(CLI::NonNegativeNumber);
  ps->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto g = psi(z_window(s, parse_address(address), radius, limits_of(c)));
      auto doc = report::document("psi");
      doc["psi"] = report::to_json(g);
      return emit(c, doc, [&](std::ostream& os) {
        for (std::size_t k = 0; k < g.domain.size(); ++k) os << g.domain[k] << " " << g.values[k] << "\n";
      });
    };
  });

  auto* rw = point->add_subcommand("return-word", "Return word R_n: gaps between B_1 visits in one pass up the stage-n tower; r_n visits");
  add_common(rw, c);
  rw->add_option("--stage", n, "Stage n >= 1")->required()->check(CLI::PositiveNumber);
  rw->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = return_word(s, n, limits_of(c));
      auto doc = report::document("return_word");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) {
        os << "r_n " << r.count << "\n";
        os << "gaps " << join(r.gaps) << "\n";
      });
    };
  });

  auto* cg = point->add_subcommand("congruence", "Congruence claim: Psi is constant on all but one residue class of return indices mod r_n");
  add_common(cg, c);
  cg->add_option("--address", address, "depth:level")->required();
  cg->add_option("--radius", radius, "Symmetric radius T")->required()->check(CLI::NonNegativeNumber);
  cg->add_option("--stage", n, "Stage n")->required()->check(CLI::PositiveNumber);
  cg->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = psi_congruence_report(s, parse_address(address), radius, n, limits_of(c));
      auto doc = report::document("congruence");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) {
        os << "modulus " << r.modulus << " returns " << r.return_count << "\n";
        os << "constant_classes " << r.constant_classes << " varying_classes " << r.varying_classes << "\n";
        os << "claim " << (r.claim_asserted ? (r.claim_holds ? "holds" : "FAILS") : "not asserted") << "\n";
      });
    };
  });

  auto* sep = point->add_subcommand("separate", "Distinct interior points have different return sets: compare finite z-windows");
  add_common(sep, c);
  sep->add_option("--address", address, "depth:level")->required();
  sep->add_option("--other", other, "depth:level")->required();
  sep->add_option("--radius", radius, "Window radius T")->required()->check(CLI::NonNegativeNumber);
  sep->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = separation_check(s, parse_address(address), parse_address(other), radius, limits_of(c));
      auto doc = report::document("separation");
      doc.update(report::to_json(r));
      return emit(c, doc, [&](std::ostream& os) {
        if (r.separating_level) {
          os << "separated at stage " << r.separating_level->first << " level " << r.separating_level->second << "\n";
        }
        os << "radius " << r.radius << " windows " << (r.windows_differ ? "differ" : "agree") << "\n";
      });
    };
  });

  auto* sw = point->add_subcommand("sweep", "Seeded interior points: returns spaced by >= h_1, stage-n returns by >= h_n, returns on both sides");
  add_common(sw, c);
  sw->add_option("--depth", depth, "Stage of the sampled addresses")->check(CLI::Range(1, 40));
  sw->add_option("--count", count, "Number of addresses");
  sw->add_option("--seed", seed, "RNG seed");
  sw->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = z_window_sweep(s, depth, count, seed, limits_of(c));
      auto doc = report::document("window_sweep");
      doc["depth"] = r.depth;
      doc["seed"] = seed;
      doc["samples"] = r.samples;
      doc["gap_violations"] = r.gap_violations;
      doc["aligned_violations"] = r.aligned_violations;
      doc["one_sided"] = r.one_sided;
      doc["details"] = r.details;
      const bool ok = r.gap_violations == 0 && r.aligned_violations == 0 && r.one_sided == 0;
      emit(c, doc, [&](std::ostream& os) {
        os << "samples " << r.samples << " gap_violations " << r.gap_violations << " aligned_violations "
           << r.aligned_violations << " one_sided " << r.one_sided << "\n";
        for (const auto& d : r.details) os << d << "\n";
      });
      return ok ? 0 : kExitError;
    };
  });

  auto* ss = point->add_subcommand("separation-sweep", "Seeded interior pairs compared on windows of radius l(n) + h_n + a_max, n the separating stage");
  add_common(ss, c);
  ss->add_option("--depth", depth, "Stage of the sampled addresses")->check(CLI::Range(2, 40));
  ss->add_option("--count", count, "Number of pairs");
  ss->add_option("--seed", seed, "RNG seed");
  ss->add_option("--horizon", horizon, "Stage bound for the minimal context")->check(CLI::Range(2, 40));
  ss->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto r = separation_sweep(s, depth, count, seed, horizon, limits_of(c));
      auto doc = report::document("separation_sweep");
      doc["depth"] = r.depth;
      doc["horizon"] = r.horizon;
      doc["seed"] = seed;
      doc["pairs"] = r.pairs;
      doc["rejected"] = r.rejected;
      doc["failures"] = r.failures;
      doc["radius_by_stage"] = r.radius_by_stage;
      doc["details"] = r.details;
      emit(c, doc, [&](std::ostream& os) {
        os << "pairs " << r.pairs << " rejected " << r.rejected << " failures " << r.failures << "\n";
        for (const auto& d : r.details) os << d << "\n";
      });
      return r.failures == 0 ? 0 : kExitError;
    };
  });
}

void centralizer_commands(CLI::App& app, Cli& cli) {
  auto& c = cli.common;
  static int length = 0, radius = 0, k = 0, test_len = -1, inverse_radius = -1, depth = 10;
  static unsigned threads = 0;
  static bool allow_repeating = false, list = false;
  static std::string input;

  auto* lang = app.add_subcommand("language", "Finite language of the subshift: factors of W_M, M the first stage whose factor sets agree with M+1");
  add_common(lang, c);
  lang->add_option("--length", length, "Longest factor length L")->required()->check(CLI::PositiveNumber);
  lang->add_flag("--allow-repeating", allow_repeating, "Skip the non-repeating precondition");
  lang->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      LanguageOptions lo;
      lo.allow_repeating = allow_repeating;
      const auto t = language(s, length, lo, limits_of(c));
      auto doc = report::document("language");
      doc["max_len"] = t.max_len();
      doc["stage"] = t.stage();
      doc["factors"] = t.factors(length);
      return emit(c, doc, [&](std::ostream& os) {
        os << "stage " << t.stage() << " count " << t.factors(length).size() << "\n";
        for (const auto& f : t.factors(length)) os << f << "\n";
      });
    };
  });

  auto* sc = app.add_subcommand("shift-code", "Powers of the shift as sliding-block codes: w -> w[R + k]");
  add_common(sc, c);
  sc->add_option("--k", k, "Power k, |k| <= R")->required();
  sc->add_option("--radius", radius, "Radius R")->required()->check(CLI::NonNegativeNumber);
  sc->add_option("--apply", input, "Apply the code to this word");
  sc->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      LanguageOptions lo;
      lo.allow_repeating = true;
      const auto t = language(s, 2 * radius + 1, lo, limits_of(c));
      const auto code = shift_power_code(k, radius, t);
      auto doc = report::document("block_code");
      doc["code"] = report::to_json(code);
      if (!input.empty()) doc["image"] = apply_code(code, input);
      return emit(c, doc, [&](std::ostream& os) {
        if (!input.empty()) {
          os << apply_code(code, input) << "\n";
          return;
        }
        for (std::size_t i = 0; i < code.domain().size(); ++i) os << code.domain()[i] << " " << code.outputs()[i] << "\n";
      });
    };
  });

  auto* codes = app.add_subcommand("codes", "Radius-R sliding-block codes carrying every length-L factor into the language");
  add_common(codes, c);
  codes->add_option("--radius", radius, "Radius R")->required()->check(CLI::NonNegativeNumber);
  codes->add_option("--test-len", test_len, "Test length L (default max(2R + 2 l(1), 3 h_2))");
  codes->add_flag("--allow-repeating", allow_repeating, "Skip the non-repeating precondition");
  codes->add_flag("--list", list, "Print every table");
  codes->add_option("--threads", threads, "Worker threads (0 = hardware)");
  codes->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto lim = limits_of(c);
      const int L = test_len > 0 ? test_len : default_test_length(s, radius, depth, lim);
      LanguageOptions lo;
      lo.allow_repeating = allow_repeating;
      const auto t = language(s, L, lo, lim);
      EnumerationStats stats;
      const auto found = enumerate_codes(t, radius, L, lim, &stats, threads);
      auto doc = report::document("codes");
      doc["radius"] = radius;
      doc["test_len"] = L;
      doc["table_slots"] = stats.table_slots;
      doc["codes_examined"] = stats.nodes_visited;
      doc["language_preserving"] = found.size();
      Json tables = Json::array();
      for (const auto& code : found) tables.push_back(code.outputs());
      doc["tables"] = tables;
      return emit(c, doc, [&](std::ostream& os) {
        os << "language_preserving " << found.size() << " codes_examined " << stats.nodes_visited << "\n";
        if (list) {
          for (const auto& code : found) os << code.outputs() << "\n";
        }
      });
    };
  });

  static std::string table;
  auto* phi = app.add_subcommand("phi", "Matching phi_x: Z(x) -> Z(g(x)), i - h_n < phi(i) <= i, Psi conjugation, and the recovered power");
  add_common(phi, c);
  phi->add_option("--radius", radius, "Code radius R")->required()->check(CLI::NonNegativeNumber);
  auto* k_opt = phi->add_option("--k", k, "Use the shift power sigma^k");
  phi->add_option("--table", table, "Code outputs over the sorted (2R+1)-factors")->excludes(k_opt);
  phi->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto lim = limits_of(c);
      LanguageOptions lo;
      lo.allow_repeating = true;
      const auto t = language(s, 2 * radius + 1, lo, lim);
      const auto g = table.empty() ? shift_power_code(k, radius, t) : BlockCode(radius, t.factors(2 * radius + 1), table);
      const OffsetRecovery rec(s, depth, lim);
      const auto pm = phi_map_normalized(rec.recognizer(), s, rec.window(), g, lim);
      const auto structure = matching_structure_violations(pm);
      const auto psi_v = psi_conjugation_check(pm, psi_of_returns(pm.zx), psi_of_returns(pm.zgx));
      auto doc = report::document("phi");
      doc["matching"] = report::to_json(pm);
      doc["structure_violations"] = structure;
      Json pv = Json::array();
      for (const auto& v : psi_v) pv.push_back(Json{{"i", v.i}, {"psi_x", v.psi_x}, {"psi_gx", v.psi_gx}});
      doc["psi_violations"] = pv;
      std::optional<std::int64_t> offset;
      std::string why;
      try {
        offset = recover_offset(pm);
      } catch (const Error& e) {
        why = e.what();
      }
      doc["recovered_offset"] = offset ? Json(*offset) : Json(nullptr);
      emit(c, doc, [&](std::ostream& os) {
        os << "stage " << pm.stage << " pre_shift " << pm.pre_shift << " pairs " << pm.pairs.size() << "\n";
        os << "structure_violations " << structure.size() << " psi_violations " << psi_v.size() << "\n";
        os << "recovered_offset " << (offset ? std::to_string(*offset) : why) << "\n";
      });
      return offset && structure.empty() && psi_v.empty() ? 0 : kExitError;
    };
  });

  auto* probe = app.add_subcommand("probe", "Centralizer probe: invertible shift-commuting codes of radius R should be exactly the shift powers");
  add_common(probe, c);
  probe->add_option("--radius", radius, "Radius R")->required()->check(CLI::NonNegativeNumber);
  probe->add_option("--test-len", test_len, "Test length L (default max(2R + 2 l(1), 3 h_2))");
  probe->add_option("--inverse-radius", inverse_radius, "Largest inverse radius R' (default R + 1)");
  probe->add_flag("--allow-repeating", allow_repeating, "Proceed silently on repeating schedules");
  probe->add_option("--threads", threads, "Worker threads (0 = hardware)");
  probe->callback([&] {
    cli.action = [&] {
      const auto s = load_schedule(c.schedule);
      const auto lim = limits_of(c);
      const int L = test_len > 0 ? test_len : default_test_length(s, radius, depth, lim);
      const int Rp = inverse_radius >= 0 ? inverse_radius : radius + 1;
      ProbeOptions po;
      po.witness_depth = depth;
      po.threads = threads;
      const auto r = centralizer_probe(s, radius, L, Rp, po, lim);
      if (!r.in_theorem_scope && !allow_repeating) {
        std::cerr << "warning: no non-repeating witness up to stage " << depth
                  << "; report is outside the theorem's hypothesis\n";
      }
      auto doc = report::document("probe");
      doc.update(report::to_json(r));
      emit(c, doc, [&](std::ostream& os) {
        os << "schedule " << r.schedule << " R " << r.radius << " L " << r.test_len << " R' " << r.inverse_radius
           << (r.in_theorem_scope ? "" : " (outside theorem scope)") << "\n";
        os << "codes_examined " << r.codes_examined << " language_preserving " << r.language_preserving
           << " invertible " << r.invertible << " exotic " << r.exotic_count << "\n";
        for (const auto& e : r.entries) {
          os << e.code.outputs() << " " << (e.shift ? "sigma^" + std::to_string(*e.shift) : std::string("EXOTIC"))
             << " offset " << opt_str(e.recovered_offset) << "\n";
        }
      });
      return r.exotic_count > 0 ? kExitExotic : 0;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank1: rank-one tower words, expected occurrences, return sets and the centralizer probe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  Cli cli;
  app.add_flag_callback("--presets", [] {
    for (const auto& n : presets::names()) std::cout << n << "\n";
    std::exit(0);
  }, "List preset schedules");
  tower_commands(app, cli);
  recognizer_commands(app, cli);
  point_commands(app, cli);
  centralizer_commands(app, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (!cli.action) return kExitUsage;
  try {
    return cli.action();
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::ParseError ? kExitUsage : kExitError;
  }
}
