#include "rank1/centralizer.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "rank1/error.hpp"
#include "rank1/phi.hpp"
#include "rank1/recognizer.hpp"
#include "rank1/tower.hpp"

namespace rank1 {
namespace {

constexpr char kUnset = '?';

// Constraint structure shared read-only by all workers.
struct SearchSpace {
  const LanguageTable* lang;
  int radius;
  int image_len;
  std::vector<std::string> slots;                          // (2R+1)-factors
  std::vector<std::vector<int>> windows;                   // per test word: slot of each window
  std::vector<std::vector<std::pair<int, int>>> uses;      // per slot: (word, window index)
  std::vector<int> order;                                  // assignment order of slots
};

SearchSpace build_space(const LanguageTable& lang, int radius, int test_len) {
  SearchSpace sp;
  sp.lang = &lang;
  sp.radius = radius;
  sp.image_len = test_len - 2 * radius;
  sp.slots = lang.factors(2 * radius + 1);
  sp.uses.resize(sp.slots.size());
  std::vector<bool> seen(sp.slots.size(), false);
  const auto span = static_cast<std::size_t>(2 * radius + 1);
  for (const auto& w : lang.factors(test_len)) {
    std::vector<int> win;
    for (std::size_t i = 0; i + span <= w.size(); ++i) {
      const auto idx = static_cast<int>(lang.index_of(std::string_view(w).substr(i, span)));
      win.push_back(idx);
      sp.uses[idx].emplace_back(static_cast<int>(sp.windows.size()), static_cast<int>(i));
      if (!seen[idx]) {
        seen[idx] = true;
        sp.order.push_back(idx);
      }
    }
    sp.windows.push_back(std::move(win));
  }
  for (std::size_t i = 0; i < sp.slots.size(); ++i) {
    if (!seen[i]) sp.order.push_back(static_cast<int>(i));
  }
  return sp;
}

class Searcher {
 public:
  Searcher(const SearchSpace& sp, std::atomic<std::int64_t>& nodes, std::int64_t node_budget)
      : sp_(sp), nodes_(nodes), budget_(node_budget), table_(sp.slots.size(), kUnset) {}

  // Collects the consistent assignments of the first `split` slots.
  std::vector<std::string> frontier(std::size_t split) {
    std::vector<std::string> out;
    descend(0, split, &out);
    return out;
  }

  // Fixes a frontier prefix, then searches the rest.
  void run(const std::string& prefix) {
    for (std::size_t d = 0; d < prefix.size(); ++d) table_[sp_.order[d]] = prefix[d];
    descend(prefix.size(), sp_.order.size(), nullptr);
  }

  std::vector<std::string> results;

 private:
  // Node counting matches one sequential depth-first pass however the tree is split.
  void descend(std::size_t depth, std::size_t stop, std::vector<std::string>* prefixes) {
    if (depth == stop && prefixes) {
      std::string p;
      for (std::size_t d = 0; d < depth; ++d) p.push_back(table_[sp_.order[d]]);
      prefixes->push_back(std::move(p));
      return;
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      fail(Errc::BudgetExceeded, "code enumeration exceeded the node budget");
    }
    if (depth == sp_.order.size()) {
      results.push_back(table_);
      return;
    }
    const int slot = sp_.order[depth];
    for (char out : {'0', '1'}) {
      table_[slot] = out;
      if (consistent(slot)) descend(depth + 1, stop, prefixes);
    }
    table_[slot] = kUnset;
  }

  // Every maximal determined stretch through a window using `slot` must be a factor.
  bool consistent(int slot) {
    for (auto [w, pos] : sp_.uses[slot]) {
      const auto& win = sp_.windows[w];
      int lo = pos, hi = pos;
      while (lo > 0 && table_[win[lo - 1]] != kUnset) --lo;
      while (hi + 1 < static_cast<int>(win.size()) && table_[win[hi + 1]] != kUnset) ++hi;
      buffer_.clear();
      for (int i = lo; i <= hi; ++i) buffer_.push_back(table_[win[i]]);
      if (!sp_.lang->contains(buffer_)) return false;
    }
    return true;
  }

  const SearchSpace& sp_;
  std::atomic<std::int64_t>& nodes_;
  std::int64_t budget_;
  std::string table_;
  std::string buffer_;
};

bool maps_into_language(const BlockCode& code, const LanguageTable& lang, int test_len) {
  for (const auto& w : lang.factors(test_len)) {
    if (!lang.contains(apply_code(code, w))) return false;
  }
  return true;
}

}  // namespace

std::vector<BlockCode> enumerate_codes(const LanguageTable& lang, int radius, int test_len, const Limits& limits,
                                       EnumerationStats* stats, unsigned threads) {
  if (radius < 0) fail(Errc::InvalidArgument, "radius must be nonnegative");
  if (test_len < 2 * radius + 1) fail(Errc::InvalidArgument, "test length shorter than the code window");
  if (test_len > lang.max_len()) fail(Errc::InvalidArgument, "test length exceeds the language table");
  if (lang.factors(test_len).empty()) fail(Errc::InvalidArgument, "language has no factors of the test length");

  const auto sp = build_space(lang, radius, test_len);
  std::atomic<std::int64_t> nodes{0};

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // The split depth is fixed so results and counts do not depend on `threads`.
  Searcher root(sp, nodes, limits.max_search_nodes);
  const auto prefixes = root.frontier(std::min<std::size_t>(sp.order.size(), 8));
  if (prefixes.empty()) {
    if (stats) {
      stats->nodes_visited = nodes.load();
      stats->table_slots = static_cast<std::int64_t>(sp.slots.size());
    }
    return {};
  }

  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(prefixes.size()));
  std::vector<std::future<std::vector<std::string>>> jobs;
  for (unsigned t = 0; t < workers; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      std::vector<std::string> found;
      for (std::size_t i = t; i < prefixes.size(); i += workers) {
        Searcher s(sp, nodes, limits.max_search_nodes);
        s.run(prefixes[i]);
        found.insert(found.end(), s.results.begin(), s.results.end());
      }
      return found;
    }));
  }
  std::vector<std::string> tables;
  for (auto& j : jobs) {
    auto part = j.get();
    tables.insert(tables.end(), part.begin(), part.end());
  }
  std::sort(tables.begin(), tables.end());

  if (stats) {
    stats->nodes_visited = nodes.load();
    stats->table_slots = static_cast<std::int64_t>(sp.slots.size());
  }
  std::vector<BlockCode> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.emplace_back(radius, sp.slots, std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BlockCode> find_inverse(const BlockCode& code, const LanguageTable& lang, int max_inverse_radius,
                                      int test_len) {
  const int R = code.radius();
  for (int rp = 0; rp <= max_inverse_radius; ++rp) {
    const int total = R + rp;
    if (2 * total + 1 > test_len || 2 * total + 1 > lang.max_len()) break;
    const auto& dom = lang.factors(2 * rp + 1);
    std::string forced(dom.size(), kUnset);
    bool conflict = false;
    for (const auto& w : lang.factors(2 * total + 1)) {
      const auto u = apply_code(code, w);
      const auto idx = lang.index_of(u);
      if (idx < 0) {
        conflict = true;
        break;
      }
      const char want = w[static_cast<std::size_t>(total)];
      char& slot = forced[static_cast<std::size_t>(idx)];
      if (slot != kUnset && slot != want) {
        conflict = true;
        break;
      }
      slot = want;
    }
    if (conflict) continue;

    std::vector<std::size_t> free_slots;
    for (std::size_t i = 0; i < forced.size(); ++i) {
      if (forced[i] == kUnset) free_slots.push_back(i);
    }
    if (free_slots.size() > 16) continue;
    for (std::uint32_t bits = 0; bits < (1u << free_slots.size()); ++bits) {
      std::string table = forced;
      for (std::size_t f = 0; f < free_slots.size(); ++f) table[free_slots[f]] = ((bits >> f) & 1u) ? '1' : '0';
      BlockCode h(rp, dom, table);
      if (!maps_into_language(h, lang, test_len)) continue;
      bool ok = true;
      for (const auto& w : lang.factors(test_len)) {
        const auto trimmed = w.substr(static_cast<std::size_t>(total), w.size() - 2 * static_cast<std::size_t>(total));
        if (apply_code(h, apply_code(code, w)) != trimmed || apply_code(code, apply_code(h, w)) != trimmed) {
          ok = false;
          break;
        }
      }
      if (ok) return h;
    }
  }
  return std::nullopt;
}

std::vector<InvertibleCode> invertible_codes(const std::vector<BlockCode>& codes, const LanguageTable& lang,
                                             int max_inverse_radius, int test_len) {
  std::vector<InvertibleCode> out;
  for (const auto& g : codes) {
    if (auto h = find_inverse(g, lang, max_inverse_radius, test_len)) out.push_back({g, *h});
  }
  return out;
}

int default_test_length(const CuttingSchedule& s, int radius, int witness_depth, const Limits& limits) {
  const auto h1 = height(s, 1);
  const auto h2 = height(s, 2);
  std::int64_t len = std::max<std::int64_t>(2 * radius + h1, 3 * h2);
  if (nonconstant_gap_witness(s, 1, witness_depth, limits)) {
    len = std::max(len, 2 * radius + 2 * context_bound(s, 1, witness_depth, limits).l);
  }
  if (len > 4096) fail(Errc::BudgetExceeded, "default test length too large; pass one explicitly");
  return static_cast<int>(len);
}

ProbeReport centralizer_probe(const CuttingSchedule& s, int radius, int test_len, int inverse_radius,
                              const ProbeOptions& options, const Limits& limits) {
  if (radius < 0) fail(Errc::InvalidArgument, "radius must be nonnegative");
  if (inverse_radius < radius) fail(Errc::InvalidArgument, "inverse radius must be >= radius");
  if (test_len < 2 * radius + height(s, 1)) fail(Errc::InvalidArgument, "test length must be >= 2R + h_1");

  ProbeReport rep;
  rep.schedule = s.name();
  rep.radius = radius;
  rep.test_len = test_len;
  rep.inverse_radius = inverse_radius;
  rep.in_theorem_scope = nonconstant_gap_witness(s, 1, options.witness_depth, limits).has_value();

  LanguageOptions lo;
  lo.allow_repeating = true;
  lo.witness_depth = options.witness_depth;
  const auto lang = language(s, std::max(test_len, 2 * (radius + inverse_radius) + 1), lo, limits);
  rep.language_stage = lang.stage();

  EnumerationStats stats;
  const auto codes = enumerate_codes(lang, radius, test_len, limits, &stats, options.threads);
  rep.codes_examined = stats.nodes_visited;
  rep.table_slots = stats.table_slots;
  rep.language_preserving = static_cast<std::int64_t>(codes.size());

  const auto inv = invertible_codes(codes, lang, inverse_radius, test_len);
  rep.invertible = static_cast<std::int64_t>(inv.size());

  std::optional<OffsetRecovery> recovery;
  std::string recovery_note;
  if (options.recover_offsets && rep.in_theorem_scope) {
    try {
      recovery.emplace(s, options.witness_depth, limits);
      rep.offset_stage = recovery->stage();
    } catch (const Error& e) {
      recovery_note = e.what();
    }
  } else if (options.recover_offsets) {
    recovery_note = "skipped: schedule outside the non-repeating hypothesis";
  }

  for (const auto& ic : inv) {
    ProbeEntry entry{ic.code, ic.inverse, std::nullopt, std::nullopt, recovery_note};
    const auto powers = matching_shift_powers(ic.code, lang);
    if (!powers.empty()) entry.shift = powers.front();
    if (!entry.shift) ++rep.exotic_count;
    if (recovery) {
      try {
        entry.recovered_offset = recovery->recover(ic.code).offset;
      } catch (const Error& e) {
        entry.offset_note = e.what();
      }
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace rank1
