#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank1/limits.hpp"
#include "rank1/schedule.hpp"
#include "rank1/tower.hpp"

namespace rank1 {

// A point of the space, seen to finite precision: it sits on level `level`
// of the stage-`depth` tower.
struct PointAddress {
  int depth = 0;
  Position level = 0;

  friend bool operator==(const PointAddress&, const PointAddress&) = default;
};

// Parses "depth:level".
PointAddress parse_address(const std::string& text);
std::string format_address(const PointAddress& a);

// Either a level of the stage-n tower or the stage-n leftover region.
struct PointLocation {
  int stage = 0;
  std::optional<Position> level;  // empty: spacer (leftover) at this stage

  bool is_spacer() const { return !level.has_value(); }
  friend bool operator==(const PointLocation&, const PointLocation&) = default;
};

std::string format_location(const PointLocation& loc);

PointLocation locate(const CuttingSchedule& s, const PointAddress& a, int n, const Limits& limits = {});

// Descends into copy c of the stage-depth tower inside the stage-(depth+1) tower.
PointAddress extend(const CuttingSchedule& s, const PointAddress& a, int copy_index);

struct Margins {
  Position down = 0;
  Position up = 0;
};

struct InteriorMargins {
  Margins at_depth;
  // Margins relative to each stage n <= depth; empty where the point is a spacer.
  std::vector<std::optional<Margins>> per_stage;

  bool is_interior(std::int64_t k) const { return at_depth.down >= k && at_depth.up >= k; }
};

InteriorMargins interior_margin(const CuttingSchedule& s, const PointAddress& a, const Limits& limits = {});

// Returns to B_1 seen from the point, restricted to offsets [-before, after].
struct ZWindow {
  PointAddress address;
  std::int64_t before = 0;
  std::int64_t after = 0;
  std::vector<std::int64_t> returns;
};

// Symmetric window of radius T. Needs level - T >= 0 and
// level + T + h_1 <= h_depth (Errc::WindowExceedsDepth otherwise).
ZWindow z_window(const CuttingSchedule& s, const PointAddress& a, std::int64_t radius, const Limits& limits = {});
ZWindow z_window_range(const CuttingSchedule& s, const PointAddress& a, std::int64_t before, std::int64_t after,
                       const Limits& limits = {});
// Largest window that fits inside the stage-depth tower: [-level, h_depth - h_1 - level].
ZWindow maximal_z_window(const CuttingSchedule& s, const PointAddress& a, const Limits& limits = {});
// Largest symmetric radius that z_window accepts, or -1 if none.
std::int64_t max_symmetric_radius(const CuttingSchedule& s, const PointAddress& a);

// True iff the maximal in-depth window holds both a negative and a positive return.
bool z_window_two_sided_check(const CuttingSchedule& s, const PointAddress& a, std::int64_t required_margin,
                              const Limits& limits = {});

// Psi(i) = next return - i, defined on every return but the last.
struct GapFunction {
  std::vector<std::int64_t> domain;
  std::vector<std::int64_t> values;

  std::optional<std::int64_t> at(std::int64_t i) const;
};

GapFunction psi(const ZWindow& window);
GapFunction psi_of_returns(const std::vector<std::int64_t>& returns);

struct ReturnWord {
  int stage = 1;
  std::int64_t count = 0;            // r_n
  std::vector<std::int64_t> gaps;    // R_n
};

ReturnWord return_word(const CuttingSchedule& s, int n, const Limits& limits = {});

struct ResidueClass {
  std::int64_t residue = 0;
  std::vector<std::int64_t> values;  // Psi values seen in this class, in window order
  bool constant = true;
};

struct CongruenceReport {
  int stage = 0;
  std::int64_t modulus = 0;          // r_n
  std::int64_t anchor = 0;           // offset i_0 of the anchoring return
  std::int64_t return_count = 0;
  std::vector<ResidueClass> classes;
  std::int64_t constant_classes = 0;
  std::int64_t varying_classes = 0;
  // Set for schedules classified NonRepeatingUnbounded at the address depth.
  bool claim_asserted = false;
  bool claim_holds = true;
  // For each return index k (relative to the anchor): the smallest stage
  // n' in (1, depth] whose class of k mod r_{n'} is constant with at least two
  // observations, or nullopt when none is found within the depth.
  std::map<std::int64_t, std::optional<int>> constant_class_stage;
};

CongruenceReport psi_congruence_report(const CuttingSchedule& s, const PointAddress& a, std::int64_t radius, int n,
                                       const Limits& limits = {});

struct SeparationResult {
  std::optional<std::pair<int, Position>> separating_level;
  std::int64_t radius = 0;
  bool windows_differ = false;
};

// Least stage/level containing exactly one of the two points, and whether
// their z-windows of radius T differ. The radius is clipped to what fits in
// both towers.
SeparationResult separation_check(const CuttingSchedule& s, const PointAddress& a1, const PointAddress& a2,
                                  std::int64_t radius, const Limits& limits = {});

// Levels drawn uniformly from [k, h_depth - 1 - k], seeded.
std::vector<PointAddress> sample_interior_addresses(const CuttingSchedule& s, int depth, std::int64_t k,
                                                    std::size_t count, std::uint64_t seed);

struct WindowSweepReport {
  int depth = 0;
  std::size_t samples = 0;
  std::int64_t gap_violations = 0;      // consecutive returns closer than h_1
  std::int64_t aligned_violations = 0;  // stage-n returns closer than h_n, or not stage-1 returns
  std::int64_t one_sided = 0;           // maximal window lacks a negative or a positive return
  std::vector<std::string> details;
};

// Seeded h_1-interior addresses at `depth`, each checked on its maximal window.
WindowSweepReport z_window_sweep(const CuttingSchedule& s, int depth, std::size_t count, std::uint64_t seed,
                                 const Limits& limits = {});

struct SeparationSweepReport {
  int depth = 0;
  int horizon = 0;
  std::size_t pairs = 0;
  std::size_t rejected = 0;  // drawn pairs whose radius-T windows do not fit
  std::size_t failures = 0;
  std::vector<std::int64_t> radius_by_stage;  // T for separating stage n (index n)
  std::vector<std::string> details;
};

// Distinct h_1-interior pairs at `depth`, half uniform and half sharing a
// stage-n level for a random n. Each pair separated at stage n is compared
// on windows of radius T = l(n) + h_n with l the minimal context over
// stages <= horizon. Pairs whose windows leave the tower are redrawn.
SeparationSweepReport separation_sweep(const CuttingSchedule& s, int depth, std::size_t count, std::uint64_t seed,
                                       int horizon = 6, const Limits& limits = {});

}  // namespace rank1
