#include "rank1/points.hpp"

#include <algorithm>
#include <charconv>

#include "rank1/error.hpp"

namespace rank1 {
namespace {

void check_address(const CuttingSchedule& s, const PointAddress& a) {
  if (a.depth < 0) fail(Errc::InvalidArgument, "address depth must be nonnegative");
  const auto h = height(s, a.depth);
  if (a.level < 0 || a.level >= h) {
    fail(Errc::InvalidArgument, "level " + std::to_string(a.level) + " outside [0, " + std::to_string(h) + ")");
  }
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

// Returns in [-before, after] around `level`, given E_{N,1}.
std::vector<std::int64_t> returns_in(const std::vector<Position>& e1, Position level, std::int64_t before,
                                     std::int64_t after) {
  std::vector<std::int64_t> out;
  auto it = std::lower_bound(e1.begin(), e1.end(), level - before);
  for (; it != e1.end() && *it <= level + after; ++it) out.push_back(*it - level);
  return out;
}

}  // namespace

PointAddress parse_address(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::ParseError, "address must be 'depth:level': " + text);
  PointAddress a;
  auto parse = [&](std::string_view part, auto& value) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      fail(Errc::ParseError, "bad number in address: " + text);
    }
  };
  std::string_view view(text);
  parse(view.substr(0, colon), a.depth);
  parse(view.substr(colon + 1), a.level);
  if (a.depth < 0 || a.level < 0) fail(Errc::ParseError, "address components must be nonnegative");
  return a;
}

std::string format_address(const PointAddress& a) {
  return std::to_string(a.depth) + ":" + std::to_string(a.level);
}

std::string format_location(const PointLocation& loc) {
  if (loc.is_spacer()) return "Spacer(" + std::to_string(loc.stage) + ")";
  return "Level(" + std::to_string(loc.stage) + ", " + std::to_string(*loc.level) + ")";
}

PointLocation locate(const CuttingSchedule& s, const PointAddress& a, int n, const Limits& limits) {
  check_address(s, a);
  if (n < 0 || n > a.depth) fail(Errc::InvalidArgument, "locate needs 0 <= n <= depth");
  if (n == a.depth) return PointLocation{n, a.level};
  const auto e = expected_positions(s, a.depth, n, limits);
  const auto hn = height(s, n);
  auto it = std::upper_bound(e.positions.begin(), e.positions.end(), a.level);
  if (it != e.positions.begin()) {
    const auto start = *std::prev(it);
    if (a.level < start + hn) return PointLocation{n, a.level - start};
  }
  return PointLocation{n, std::nullopt};
}

PointAddress extend(const CuttingSchedule& s, const PointAddress& a, int copy_index) {
  check_address(s, a);
  const auto offs = copy_offsets(s, a.depth);
  if (copy_index < 0 || copy_index >= static_cast<int>(offs.size())) {
    fail(Errc::CopyIndexOutOfRange, "copy index " + std::to_string(copy_index) + " not in [0, " +
                                        std::to_string(offs.size()) + ")");
  }
  return PointAddress{a.depth + 1, offs[copy_index] + a.level};
}

InteriorMargins interior_margin(const CuttingSchedule& s, const PointAddress& a, const Limits& limits) {
  check_address(s, a);
  InteriorMargins out;
  const auto hs = heights(s, a.depth);
  out.at_depth = Margins{a.level, hs[a.depth] - 1 - a.level};
  for (int n = 0; n <= a.depth; ++n) {
    const auto loc = locate(s, a, n, limits);
    if (loc.is_spacer()) {
      out.per_stage.emplace_back(std::nullopt);
    } else {
      out.per_stage.emplace_back(Margins{*loc.level, hs[n] - 1 - *loc.level});
    }
  }
  return out;
}

ZWindow z_window_range(const CuttingSchedule& s, const PointAddress& a, std::int64_t before, std::int64_t after,
                       const Limits& limits) {
  check_address(s, a);
  if (a.depth < 1) fail(Errc::WindowExceedsDepth, "z-windows need depth >= 1");
  if (before < 0 || after < 0) fail(Errc::InvalidArgument, "window extents must be nonnegative");
  const auto hN = height(s, a.depth);
  const auto h1 = height(s, 1);
  if (a.level - before < 0 || a.level + after + h1 > hN) {
    fail(Errc::WindowExceedsDepth, "window [-" + std::to_string(before) + ", " + std::to_string(after) +
                                       "] around level " + std::to_string(a.level) +
                                       " leaves the stage-" + std::to_string(a.depth) + " tower");
  }
  const auto e1 = expected_positions(s, a.depth, 1, limits);
  return ZWindow{a, before, after, returns_in(e1.positions, a.level, before, after)};
}

ZWindow z_window(const CuttingSchedule& s, const PointAddress& a, std::int64_t radius, const Limits& limits) {
  return z_window_range(s, a, radius, radius, limits);
}

ZWindow maximal_z_window(const CuttingSchedule& s, const PointAddress& a, const Limits& limits) {
  check_address(s, a);
  const auto after = height(s, a.depth) - height(s, 1) - a.level;
  if (after < 0) fail(Errc::WindowExceedsDepth, "point lies in the top h_1 levels; no window fits");
  return z_window_range(s, a, a.level, after, limits);
}

std::int64_t max_symmetric_radius(const CuttingSchedule& s, const PointAddress& a) {
  check_address(s, a);
  if (a.depth < 1) return -1;
  const auto up = height(s, a.depth) - height(s, 1) - a.level;
  return std::min(a.level, up);
}

bool z_window_two_sided_check(const CuttingSchedule& s, const PointAddress& a, std::int64_t required_margin,
                              const Limits& limits) {
  const auto m = interior_margin(s, a, limits);
  if (required_margin < height(s, 1) || !m.is_interior(required_margin)) {
    fail(Errc::InvalidArgument, "address is not " + std::to_string(required_margin) +
                                    "-interior with margin >= h_1");
  }
  const auto w = maximal_z_window(s, a, limits);
  const bool negative = !w.returns.empty() && w.returns.front() < 0;
  const bool positive = !w.returns.empty() && w.returns.back() > 0;
  return negative && positive;
}

std::optional<std::int64_t> GapFunction::at(std::int64_t i) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), i);
  if (it == domain.end() || *it != i) return std::nullopt;
  return values[static_cast<std::size_t>(it - domain.begin())];
}

GapFunction psi_of_returns(const std::vector<std::int64_t>& returns) {
  if (returns.size() < 2) fail(Errc::TooFewReturns, "Psi needs at least two returns");
  GapFunction g;
  for (std::size_t i = 0; i + 1 < returns.size(); ++i) {
    g.domain.push_back(returns[i]);
    g.values.push_back(returns[i + 1] - returns[i]);
  }
  return g;
}

GapFunction psi(const ZWindow& window) { return psi_of_returns(window.returns); }

ReturnWord return_word(const CuttingSchedule& s, int n, const Limits& limits) {
  if (n < 1) fail(Errc::InvalidArgument, "return words are defined for n >= 1");
  const auto e = expected_positions(s, n, 1, limits).positions;
  ReturnWord rw{n, static_cast<std::int64_t>(e.size()), {}};
  for (std::size_t i = 1; i < e.size(); ++i) rw.gaps.push_back(e[i] - e[i - 1]);
  return rw;
}

CongruenceReport psi_congruence_report(const CuttingSchedule& s, const PointAddress& a, std::int64_t radius, int n,
                                       const Limits& limits) {
  if (n < 1 || n > a.depth) fail(Errc::InvalidArgument, "congruence stage must satisfy 1 <= n <= depth");
  const auto window = z_window(s, a, radius, limits);
  const auto rn = return_word(s, n, limits).count;
  const auto count = static_cast<std::int64_t>(window.returns.size());
  if (count < 3 * rn) {
    fail(Errc::TooFewReturns, "window holds " + std::to_string(count) + " returns, need >= 3 r_n = " +
                                  std::to_string(3 * rn));
  }

  // Anchor: the first return sitting on the base of the stage-n tower.
  const auto en = expected_positions(s, a.depth, n, limits);
  std::optional<std::size_t> anchor_idx;
  for (std::size_t i = 0; i < window.returns.size(); ++i) {
    if (en.contains(a.level + window.returns[i])) {
      anchor_idx = i;
      break;
    }
  }
  if (!anchor_idx) fail(Errc::TooFewReturns, "no return in the window lies on the stage-n base");

  const auto g = psi(window);
  CongruenceReport rep;
  rep.stage = n;
  rep.modulus = rn;
  rep.anchor = window.returns[*anchor_idx];
  rep.return_count = count;

  const auto base = static_cast<std::int64_t>(*anchor_idx);
  auto classes_for = [&](std::int64_t modulus) {
    std::vector<ResidueClass> cls(static_cast<std::size_t>(modulus));
    for (std::int64_t r = 0; r < modulus; ++r) cls[r].residue = r;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      const auto k = static_cast<std::int64_t>(i) - base;
      auto& c = cls[static_cast<std::size_t>(mod_floor(k, modulus))];
      c.values.push_back(g.values[i]);
    }
    for (auto& c : cls) {
      c.constant = std::all_of(c.values.begin(), c.values.end(), [&](auto v) { return v == c.values.front(); });
    }
    return cls;
  };

  rep.classes = classes_for(rn);
  for (const auto& c : rep.classes) (c.constant ? rep.constant_classes : rep.varying_classes)++;

  const auto verdict = classify(s, std::max(a.depth, 2), limits).verdict;
  if (verdict == SpacerVerdict::NonRepeatingUnbounded) {
    rep.claim_asserted = true;
    rep.claim_holds = rep.constant_classes >= rn - 1;
  }

  std::vector<std::vector<ResidueClass>> per_stage;
  std::vector<std::int64_t> moduli;
  for (int m = 2; m <= a.depth; ++m) {
    moduli.push_back(return_word(s, m, limits).count);
    per_stage.push_back(classes_for(moduli.back()));
  }
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i) - base;
    std::optional<int> found;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      const auto& c = per_stage[j][static_cast<std::size_t>(mod_floor(k, moduli[j]))];
      if (c.constant && c.values.size() >= 2) {
        found = static_cast<int>(j) + 2;
        break;
      }
    }
    rep.constant_class_stage[k] = found;
  }
  return rep;
}

SeparationResult separation_check(const CuttingSchedule& s, const PointAddress& a1, const PointAddress& a2,
                                  std::int64_t radius, const Limits& limits) {
  if (a1.depth != a2.depth) fail(Errc::DepthMismatch, "addresses must share a depth");
  if (a1.level == a2.level) fail(Errc::InvalidArgument, "addresses must be distinct");
  const auto h1 = height(s, 1);
  for (const auto* a : {&a1, &a2}) {
    if (!interior_margin(s, *a, limits).is_interior(h1)) {
      fail(Errc::InvalidArgument, "address " + format_address(*a) + " is not h_1-interior");
    }
  }

  SeparationResult out;
  for (int n = 0; n <= a1.depth && !out.separating_level; ++n) {
    const auto l1 = locate(s, a1, n, limits);
    const auto l2 = locate(s, a2, n, limits);
    if (l1 == l2) continue;
    out.separating_level = std::make_pair(n, l1.level ? *l1.level : *l2.level);
  }

  out.radius = std::min({radius, max_symmetric_radius(s, a1), max_symmetric_radius(s, a2)});
  if (out.radius < 0) fail(Errc::WindowExceedsDepth, "no common window fits both addresses");
  const auto w1 = z_window(s, a1, out.radius, limits);
  const auto w2 = z_window(s, a2, out.radius, limits);
  out.windows_differ = w1.returns != w2.returns;
  return out;
}

}  // namespace rank1
