#pragma once

#include "pcd/geometry.hpp"
#include "pcd/rational.hpp"

namespace pcd {

/// Closed-form efficiencies of the compound train. Backward values are
/// reported raw and may be non-positive; callers read self_locking instead
/// of expecting a clamp.
struct EfficiencyReport {
  double eta_sh = 1.0;   // 2K-H forward, sun -> carrier
  double eta_hs = 1.0;   // 2K-H backward, carrier -> sun
  double eta_hr2 = 1.0;  // K-H-V forward, carrier -> ring
  double eta_r2h = 1.0;  // K-H-V backward, ring -> carrier
  double eta_sr2 = 1.0;  // compound forward
  double eta_r2s = 1.0;  // compound backward
  bool self_locking = false;
};

/// eta_sh = (eta_sp1*eta_p1r1*z_r1 + z_s) / (z_r1 + z_s)
double planetary_forward(const PlanetaryStageGeometry& geom, const MeshEfficiencySet& mesh);

/// eta_hs = eta_r1p1*eta_p1s*(z_r1 + z_s) / (z_r1 + eta_r1p1*eta_p1s*z_s)
double planetary_backward(const PlanetaryStageGeometry& geom, const MeshEfficiencySet& mesh);

/// eta_hr2 = (z_r2 - z_p2) / (z_r2 - eta_r2p2*z_p2)
double khv_forward(const CycloidStageGeometry& geom, const MeshEfficiencySet& mesh);

/// eta_r2h = (eta_p2r2*z_r2 - z_p2) / (eta_p2r2*(z_r2 - z_p2)); non-positive
/// when the stage self-locks, never clamped.
double khv_backward(const CycloidStageGeometry& geom, const MeshEfficiencySet& mesh);

/// Mesh efficiency at and below which the K-H-V stage self-locks: z_p2/z_r2.
Rational self_lock_threshold(const CycloidStageGeometry& geom);

EfficiencyReport compound_efficiencies(const CompoundTrainGeometry& train,
                                       const MeshEfficiencySet& mesh);

}  // namespace pcd
