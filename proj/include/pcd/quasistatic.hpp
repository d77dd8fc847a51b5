#pragma once

#include "pcd/geometry.hpp"
#include "pcd/kinematics.hpp"

namespace pcd {

enum class Direction { forward, backward };

/// One quasi-static drive case. input_torque and input_speed refer to the
/// driving member of the chosen direction: sun (2K-H forward), carrier
/// (2K-H backward, K-H-V forward) or ring R2 (K-H-V backward).
struct DriveCase {
  Direction direction = Direction::forward;
  double input_torque = 1.0;  // N*m, > 0
  double input_speed = 1.0;   // rad/s, != 0
  MeshEfficiencySet mesh;
};

/// Torque / tangential-force / power breakdown of one solved case. Torques
/// and forces are magnitudes; forces are in torque-per-tooth-count units
/// since radii are only fixed up to a common scale. Fields of the other
/// stage or direction stay zero.
struct PowerFlowReport {
  Direction direction = Direction::forward;

  double torque_s = 0.0;
  double torque_p1 = 0.0;  // always 0: the planet transmits no net torque
  double torque_r1 = 0.0;
  double torque_r2 = 0.0;
  double torque_p2 = 0.0;

  double force_r1p1 = 0.0;
  double force_p1s = 0.0;
  double force_p1r1 = 0.0;
  double force_sp1 = 0.0;
  double force_p2r2 = 0.0;
  double force_r2p2 = 0.0;

  SpeedState speeds;

  double power_in = 0.0;    // W
  double power_out = 0.0;   // W; P_in = P_out + P_loss
  double power_loss = 0.0;  // W, >= 0 for mesh efficiencies <= 1
  double efficiency = 1.0;  // may be <= 0 in a self-locking backward case
  bool self_locking = false;
};

PowerFlowReport solve_case(const PlanetaryStageGeometry& geom, const DriveCase& drive);
PowerFlowReport solve_case(const CycloidStageGeometry& geom, const DriveCase& drive);

/// Closed-form value vs power-flow value for the same geometry and mesh set.
struct CrossCheck {
  double closed_form = 0.0;
  double power_flow = 0.0;
  double relative_difference = 0.0;
  bool flagged = false;  // relative difference above 1e-9
};

CrossCheck cross_check(const PlanetaryStageGeometry& geom, const MeshEfficiencySet& mesh,
                       Direction direction);
CrossCheck cross_check(const CycloidStageGeometry& geom, const MeshEfficiencySet& mesh,
                       Direction direction);

}  // namespace pcd
