#pragma once

#include "pcd/geometry.hpp"
#include "pcd/rational.hpp"

namespace pcd {

/// Angular velocities of every component in rad/s, in the stationary frame
/// and in the carrier frame (suffix _h). Sign encodes direction. Only the
/// slots of the stage that produced the state are meaningful; the rest stay
/// zero. Carrier-frame values always satisfy omega_x_h = omega_x - omega_h.
struct SpeedState {
  double omega_s = 0.0;
  double omega_p1 = 0.0;
  double omega_r1 = 0.0;
  double omega_h = 0.0;
  double omega_p2 = 0.0;
  double omega_r2 = 0.0;

  double omega_s_h = 0.0;
  double omega_p1_h = 0.0;
  double omega_r1_h = 0.0;
  double omega_h_h = 0.0;
  double omega_p2_h = 0.0;
  double omega_r2_h = 0.0;
};

/// 2K-H with the ring fixed, sun driven at omega_s.
SpeedState planetary_speeds(const PlanetaryStageGeometry& geom, double omega_s);

/// K-H-V with the disc spin held by the output mechanism, carrier driven at
/// omega_h. The ring R2 is the output member.
SpeedState khv_speeds(const CycloidStageGeometry& geom, double omega_h);

/// i_2kh = (z_s + z_r1) / z_s
Rational planetary_ratio(const PlanetaryStageGeometry& geom);

/// i_khv = z_r2 / (z_r2 - z_p2), which is z_r2 for a one-tooth difference.
Rational khv_ratio(const CycloidStageGeometry& geom);

/// i_3khv = i_2kh * i_khv = z_r2 * (z_s + z_r1) / z_s
Rational compound_ratio(const CompoundTrainGeometry& train);

}  // namespace pcd
