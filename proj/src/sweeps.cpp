#include <algorithm>
#include <random>

#include "rank1/error.hpp"
#include "rank1/points.hpp"
#include "rank1/recognizer.hpp"

namespace rank1 {

std::vector<PointAddress> sample_interior_addresses(const CuttingSchedule& s, int depth, std::int64_t k,
                                                    std::size_t count, std::uint64_t seed) {
  const auto h = height(s, depth);
  if (h - 1 - k < k) fail(Errc::InvalidArgument, "no " + std::to_string(k) + "-interior level at this depth");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Position> level(k, h - 1 - k);
  std::vector<PointAddress> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back({depth, level(rng)});
  return out;
}

WindowSweepReport z_window_sweep(const CuttingSchedule& s, int depth, std::size_t count, std::uint64_t seed,
                                 const Limits& limits) {
  WindowSweepReport rep;
  rep.depth = depth;
  const auto hs = heights(s, depth);
  const auto h1 = hs[1];
  std::vector<std::vector<Position>> en;
  for (int n = 0; n <= depth; ++n) en.push_back(expected_positions(s, depth, n, limits).positions);

  for (const auto& a : sample_interior_addresses(s, depth, h1, count, seed)) {
    ++rep.samples;
    const auto w = maximal_z_window(s, a, limits);
    for (std::size_t i = 1; i < w.returns.size(); ++i) {
      if (w.returns[i] - w.returns[i - 1] < h1) {
        ++rep.gap_violations;
        rep.details.push_back(format_address(a) + ": stage-1 gap " + std::to_string(w.returns[i] - w.returns[i - 1]));
      }
    }
    for (int n = 2; n <= depth; ++n) {
      std::optional<Position> prev;
      for (auto e : en[n]) {
        const auto t = e - a.level;
        if (t < -w.before || t > w.after) continue;
        if (!std::binary_search(w.returns.begin(), w.returns.end(), t)) {
          ++rep.aligned_violations;
          rep.details.push_back(format_address(a) + ": stage-" + std::to_string(n) + " return " +
                                std::to_string(t) + " is not a stage-1 return");
        }
        if (prev && t - *prev < hs[n]) {
          ++rep.aligned_violations;
          rep.details.push_back(format_address(a) + ": stage-" + std::to_string(n) + " gap " +
                                std::to_string(t - *prev));
        }
        prev = t;
      }
    }
    if (!z_window_two_sided_check(s, a, h1, limits)) {
      ++rep.one_sided;
      rep.details.push_back(format_address(a) + ": returns on one side only");
    }
  }
  return rep;
}

SeparationSweepReport separation_sweep(const CuttingSchedule& s, int depth, std::size_t count, std::uint64_t seed,
                                       int horizon, const Limits& limits) {
  if (depth < 2 || horizon < depth) fail(Errc::InvalidArgument, "separation sweep needs 2 <= depth <= horizon");
  SeparationSweepReport rep;
  rep.depth = depth;
  rep.horizon = horizon;
  const auto hs = heights(s, depth);
  const auto a_max = classify(s, depth, limits).a_max;
  rep.radius_by_stage.assign(static_cast<std::size_t>(depth) + 1, -1);
  for (int n = 1; n < depth; ++n) {
    rep.radius_by_stage[n] = minimal_context(s, n, horizon, limits).l + hs[n] + a_max;
  }
  rep.radius_by_stage[0] = rep.radius_by_stage[1];

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Position> any_level(hs[1], hs[depth] - 1 - hs[1]);
  std::uniform_int_distribution<int> any_stage(1, depth - 1);
  const auto draws_allowed = 1000 * count + 1000;
  std::size_t draws = 0;
  while (rep.pairs < count) {
    if (++draws > draws_allowed) fail(Errc::BudgetExceeded, "separation sweep rejected too many pairs");
    PointAddress a1{depth, any_level(rng)}, a2{depth, any_level(rng)};
    if (draws % 2 == 0) {
      // Same stage-n level, different copies.
      const int n = any_stage(rng);
      const auto e = expected_positions(s, depth, n, limits).positions;
      std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
      std::uniform_int_distribution<Position> lvl(0, hs[n] - 1);
      const auto lambda = lvl(rng);
      a1.level = e[pick(rng)] + lambda;
      a2.level = e[pick(rng)] + lambda;
    }
    if (a1.level == a2.level) continue;
    const auto m1 = max_symmetric_radius(s, a1), m2 = max_symmetric_radius(s, a2);
    if (std::min({a1.level, a2.level}) < hs[1] || std::max(a1.level, a2.level) > hs[depth] - 1 - hs[1]) {
      ++rep.rejected;
      continue;
    }
    int n = 0;
    while (n <= depth && locate(s, a1, n, limits) == locate(s, a2, n, limits)) ++n;
    if (n >= depth) {  // separated only at the top stage; no window fits
      ++rep.rejected;
      continue;
    }
    const auto T = rep.radius_by_stage[n];
    if (m1 < T || m2 < T) {
      ++rep.rejected;
      continue;
    }
    ++rep.pairs;
    const auto r = separation_check(s, a1, a2, T, limits);
    if (!r.windows_differ || r.radius != T) {
      ++rep.failures;
      rep.details.push_back(format_address(a1) + " vs " + format_address(a2) + " separated at stage " +
                            std::to_string(n) + ": windows of radius " + std::to_string(T) + " agree");
    }
  }
  return rep;
}

}  // namespace rank1
