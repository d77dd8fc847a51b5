#pragma once

#include <optional>
#include <vector>

#include "pcd/efficiency.hpp"
#include "pcd/geometry.hpp"
#include "pcd/rational.hpp"

namespace pcd {

struct IntRange {
  int lo = 0;
  int hi = -1;  // inclusive; lo > hi means empty
  bool empty() const { return lo > hi; }
  bool contains(int v) const { return v >= lo && v <= hi; }
};

enum class MeritDirection { forward, backward, both };

/// Exhaustive tooth-count search for a target compound reduction ratio.
/// z_r1 and z_r2 are derived (coaxiality and one-tooth difference are
/// equalities), so only z_s, z_p1, z_p2 are free.
struct DesignQuery {
  double target_ratio = 0.0;      // > 1
  double ratio_tolerance = 0.01;  // relative, in [0, 0.5)
  IntRange z_s_bounds;
  IntRange z_p1_bounds;
  IntRange z_p2_bounds;
  std::optional<IntRange> z_r1_bounds;  // extra filter on the derived counts
  std::optional<IntRange> z_r2_bounds;
  int n_planets = 3;
  MeshEfficiencySet mesh;  // assumed values used only for ranking
  MeritDirection merit = MeritDirection::forward;
  bool forbid_self_locking = true;
};

struct DesignCandidate {
  CompoundTrainGeometry train;
  Rational achieved_ratio;
  double ratio_error = 0.0;  // |achieved/target - 1|
  EfficiencyReport report;
  double merit_value = 0.0;  // efficiency used for ranking
};

/// Every valid combination within bounds whose compound ratio lies within
/// tolerance, sorted by descending merit efficiency, then ascending ratio
/// error, then ascending z_r2, z_s, z_p1. An infeasible query returns an
/// empty list.
std::vector<DesignCandidate> enumerate_designs(const DesignQuery& query);

/// Candidates not dominated in (lower ratio_error, higher merit_value).
std::vector<DesignCandidate> pareto_front(const std::vector<DesignCandidate>& candidates);

}  // namespace pcd
