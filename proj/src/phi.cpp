#include "rank1/phi.hpp"

#include <algorithm>

#include "rank1/error.hpp"
#include "rank1/tower.hpp"

namespace rank1 {
namespace {

bool contains_sorted(const std::vector<Position>& v, Position x) { return std::binary_search(v.begin(), v.end(), x); }

}  // namespace

PhiMatching phi_map(const ExpectedRecognizer& rec, const CuttingSchedule& s, const XWindow& x, const BlockCode& g,
                    int pre_shift, const Limits& limits) {
  const int n = rec.stage();
  if (n < 1) fail(Errc::InvalidArgument, "phi_map needs a recognizer of stage >= 1");
  const std::int64_t R = g.radius();
  const auto len = static_cast<std::int64_t>(x.word.size());
  if (len < 2 * R + 2 * rec.context_length()) {
    fail(Errc::InsufficientContext, "x window shorter than 2 l(n) + 2R");
  }
  if (x.origin < 0 || x.origin >= len) fail(Errc::InvalidArgument, "origin outside the x window");

  PhiMatching out;
  out.stage = n;
  out.pre_shift = pre_shift;
  out.h = height(s, n);
  const auto base_levels = expected_positions(s, n, n - 1, limits).positions;

  // x_t = word[origin + t]; (g sigma^m x)_t = y[origin + m + t - R].
  const std::string y = apply_code(g, x.word);
  const std::int64_t shift_y = x.origin + pre_shift - R;
  for (auto p : rec.expected_starts(x.word)) out.zx.push_back(p - x.origin);
  for (auto p : rec.expected_starts(y)) out.zgx.push_back(p - shift_y);
  const std::int64_t gx_lo = -shift_y;
  const std::int64_t gx_hi = rec.decided_end(y) - shift_y;

  for (auto i : out.zx) {
    if (i - out.h + 1 < gx_lo || i >= gx_hi) continue;
    auto it = std::upper_bound(out.zgx.begin(), out.zgx.end(), i);
    if (it == out.zgx.begin() || *std::prev(it) <= i - out.h) {
      fail(Errc::NormalizationRequired, "no return of g(x) in (i - h_n, i] for i = " + std::to_string(i));
    }
    const auto phi = *std::prev(it);
    if (!contains_sorted(base_levels, i - phi)) {
      fail(Errc::NormalizationRequired, "offset " + std::to_string(i - phi) + " is not a base level of W_n");
    }
    out.pairs.push_back({i, phi});
    out.offsets.push_back(i - phi);
  }
  if (out.pairs.empty()) fail(Errc::InsufficientContext, "safe sub-window holds no return");
  if (std::all_of(out.offsets.begin(), out.offsets.end(), [&](auto o) { return o == out.offsets.front(); })) {
    out.recovered_offset = out.offsets.front() - pre_shift;
  }
  return out;
}

PhiMatching phi_map(const CuttingSchedule& s, const XWindow& x, const BlockCode& g, int context_stage, int pre_shift,
                    int witness_depth, const Limits& limits) {
  const ExpectedRecognizer rec(s, 1, context_stage, witness_depth, limits);
  return phi_map(rec, s, x, g, pre_shift, limits);
}

PhiMatching phi_map_normalized(const ExpectedRecognizer& rec, const CuttingSchedule& s, const XWindow& x,
                               const BlockCode& g, const Limits& limits) {
  const std::int64_t bound = g.radius() + height(s, rec.stage());
  std::string last;
  std::optional<PhiMatching> uneven;
  for (std::int64_t step = 0; step <= 2 * bound; ++step) {
    const auto m = static_cast<int>(step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    try {
      auto pm = phi_map(rec, s, x, g, m, limits);
      if (pm.recovered_offset) return pm;
      if (!uneven) uneven = std::move(pm);
    } catch (const Error& e) {
      if (e.code() != Errc::NormalizationRequired) throw;
      last = e.what();
    }
  }
  if (uneven) return *uneven;
  fail(Errc::NormalizationRequired, "no pre-shift with |m| <= R + h_n normalizes g: " + last);
}

std::int64_t recover_offset(const PhiMatching& m) {
  if (m.pairs.empty()) fail(Errc::InvalidArgument, "empty matching");
  for (auto o : m.offsets) {
    if (o != m.offsets.front()) {
      fail(Errc::OffsetsInconsistent,
           "offsets " + std::to_string(m.offsets.front()) + " and " + std::to_string(o) + " differ");
    }
  }
  return m.offsets.front() - m.pre_shift;
}

std::vector<std::string> matching_structure_violations(const PhiMatching& m) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < m.pairs.size(); ++k) {
    const auto [i, phi] = m.pairs[k];
    if (!(i - m.h < phi && phi <= i)) {
      out.push_back("bound fails at i = " + std::to_string(i) + ", phi = " + std::to_string(phi));
    }
    if (k > 0 && !(m.pairs[k - 1].i < i && m.pairs[k - 1].phi < phi)) {
      out.push_back("order or injectivity fails at i = " + std::to_string(i));
    }
  }
  if (!m.pairs.empty()) {
    std::vector<std::int64_t> images;
    for (const auto& p : m.pairs) images.push_back(p.phi);
    std::sort(images.begin(), images.end());
    for (auto j : m.zgx) {
      if (j < m.pairs.front().phi || j > m.pairs.back().phi) continue;
      if (!std::binary_search(images.begin(), images.end(), j)) {
        out.push_back("return " + std::to_string(j) + " of g(x) has no preimage");
      }
    }
  }
  return out;
}

std::vector<PsiViolation> psi_conjugation_check(const PhiMatching& m, const GapFunction& psi_x,
                                                const GapFunction& psi_gx) {
  if (m.pairs.size() < 2) fail(Errc::TooFewReturns, "conjugation check needs two matched pairs");
  std::vector<PsiViolation> out;
  for (const auto& p : m.pairs) {
    const auto a = psi_x.at(p.i);
    const auto b = psi_gx.at(p.phi);
    if (a && b && *a != *b) out.push_back({p.i, *a, *b});
  }
  return out;
}

int stable_template_stage(const CuttingSchedule& s, int n, int witness_depth, int max_stage, const Limits& limits) {
  for (int m = n + 1; m <= max_stage; ++m) {
    const ExpectedRecognizer rec(s, n, m, witness_depth, limits);
    if (rec.template_count() > 0 && rec.stable()) return m;
  }
  fail(Errc::NoStabilization, "recognizer templates did not stabilize by stage " + std::to_string(max_stage));
}

namespace {

int window_stage_for(const CuttingSchedule& s, int n, int witness_depth, const Limits& limits) {
  const std::int64_t want = 8 * context_bound(s, n, witness_depth, limits).l + 128;
  int k = n;
  while (height(s, k) < want) {
    if (++k > limits.max_stage) fail(Errc::BudgetExceeded, "no stage long enough for the x window");
  }
  return k;
}

int template_stage_for(const CuttingSchedule& s, int n, int window_stage, int witness_depth, const Limits& limits) {
  try {
    return stable_template_stage(s, n, witness_depth, window_stage + 1, limits);
  } catch (const Error& e) {
    if (e.code() != Errc::NoStabilization) throw;
    return window_stage + 1;
  }
}

}  // namespace

int recovery_stage(const CuttingSchedule& s, int depth, const Limits& limits) {
  const auto c = classify(s, depth, limits);
  if (c.verdict != SpacerVerdict::NonRepeatingBounded) return 1;
  int n = 1;
  while (height(s, n - 1) <= c.a_max) ++n;
  return n;
}

OffsetRecovery::OffsetRecovery(const CuttingSchedule& s, int witness_depth, const Limits& limits)
    : OffsetRecovery(s, recovery_stage(s, witness_depth, limits), witness_depth, limits) {}

OffsetRecovery::OffsetRecovery(const CuttingSchedule& s, int n, int witness_depth, const Limits& limits)
    : s_(s),
      limits_(limits),
      window_stage_(window_stage_for(s, n, witness_depth, limits)),
      x_{word(s, window_stage_, limits).bits, static_cast<Position>(height(s, window_stage_) / 2)},
      rec_(s, n, template_stage_for(s, n, window_stage_, witness_depth, limits), witness_depth, limits) {}

OffsetRecovery::Result OffsetRecovery::recover(const BlockCode& g) const {
  Result r;
  r.matching = phi_map_normalized(rec_, s_, x_, g, limits_);
  r.offset = recover_offset(r.matching);
  r.psi_violations = psi_conjugation_check(r.matching, psi_of_returns(r.matching.zx), psi_of_returns(r.matching.zgx));
  return r;
}

}  // namespace rank1
