#include "pcd/quasistatic.hpp"

#include <cmath>
#include <stdexcept>

#include "pcd/efficiency.hpp"

namespace pcd {

namespace {

void check_case(const DriveCase& drive) {
  if (!(drive.input_torque > 0.0) || !std::isfinite(drive.input_torque)) {
    throw std::invalid_argument("solve_case: input_torque must be > 0");
  }
  if (drive.input_speed == 0.0 || !std::isfinite(drive.input_speed)) {
    throw std::invalid_argument("solve_case: input_speed must be nonzero and finite");
  }
  require_valid(drive.mesh);
}

}  // namespace

PowerFlowReport solve_case(const PlanetaryStageGeometry& geom, const DriveCase& drive) {
  require_valid(geom);
  check_case(drive);

  const double rs = geom.z_s;
  const double rr1 = geom.z_r1;
  const double speed = std::abs(drive.input_speed);

  PowerFlowReport rep;
  rep.direction = drive.direction;
  rep.torque_p1 = 0.0;

  if (drive.direction == Direction::forward) {
    // Sun drives at (T_s, omega_s); the carrier is the output. With zero net
    // planet torque the two tangential forces are tied together through the
    // sun->planet mesh efficiency.
    const double omega_s = speed;
    rep.torque_s = drive.input_torque;
    rep.force_p1s = rep.torque_s / rs;
    rep.force_r1p1 = drive.mesh.eta_sp1 * rep.force_p1s;
    rep.torque_r1 = drive.mesh.eta_p1r1 * rr1 * rep.force_r1p1;

    rep.speeds = planetary_speeds(geom, omega_s);
    rep.power_loss = rep.torque_s * std::abs(rep.speeds.omega_s_h) -
                     rep.torque_r1 * std::abs(rep.speeds.omega_r1_h);
    rep.power_in = rep.torque_s * omega_s;
    rep.power_out = rep.power_in - rep.power_loss;
  } else {
    // Carrier drives at (T_h, omega_h); the sun is the output and the ring
    // carries the reaction. T_h splits as T_s + T_r1.
    const double omega_h = speed;
    const double e = drive.mesh.eta_r1p1 * drive.mesh.eta_p1s;
    rep.force_p1r1 = drive.input_torque / (e * rs + rr1);
    rep.force_sp1 = drive.mesh.eta_r1p1 * rep.force_p1r1;
    rep.torque_s = drive.mesh.eta_p1s * rs * rep.force_sp1;
    rep.torque_r1 = rr1 * rep.force_p1r1;

    const double omega_s = planetary_ratio(geom).to_double() * omega_h;
    rep.speeds = planetary_speeds(geom, omega_s);
    rep.power_loss = rep.torque_r1 * std::abs(rep.speeds.omega_r1_h) -
                     rep.torque_s * std::abs(rep.speeds.omega_s_h);
    rep.power_out = rep.torque_s * omega_s;
    rep.power_in = rep.power_out + rep.power_loss;
  }

  rep.efficiency = rep.power_out / rep.power_in;
  return rep;
}

PowerFlowReport solve_case(const CycloidStageGeometry& geom, const DriveCase& drive) {
  require_valid(geom);
  check_case(drive);

  const double rp2 = geom.z_p2;
  const double rr2 = geom.z_r2;
  const double speed = std::abs(drive.input_speed);

  PowerFlowReport rep;
  rep.direction = drive.direction;

  if (drive.direction == Direction::forward) {
    // Carrier drives at (T_h, omega_h); ring R2 is the output, the disc spin
    // is held by the output mechanism at zero absolute speed.
    const double omega_h = speed;
    rep.force_p2r2 = drive.input_torque / (rr2 - drive.mesh.eta_r2p2 * rp2);
    rep.torque_r2 = rr2 * rep.force_p2r2;
    rep.torque_p2 = drive.mesh.eta_r2p2 * rp2 * rep.force_p2r2;

    rep.speeds = khv_speeds(geom, omega_h);
    rep.power_loss = rep.torque_r2 * std::abs(rep.speeds.omega_r2_h) -
                     rep.torque_p2 * std::abs(rep.speeds.omega_p2_h);
    rep.power_in = drive.input_torque * omega_h;
    rep.power_out = rep.power_in - rep.power_loss;
  } else {
    // Ring R2 drives at (T_r2, omega_r2); the carrier is the output. When the
    // mesh efficiency drops to z_p2/z_r2 the loss consumes the whole input and
    // the stage self-locks; the report then carries a non-positive efficiency.
    const double omega_r2 = speed;
    rep.torque_r2 = drive.input_torque;
    rep.force_r2p2 = rep.torque_r2 / (drive.mesh.eta_p2r2 * rr2);
    rep.torque_p2 = rp2 * rep.force_r2p2;

    const double omega_h = rr2 / (rr2 - rp2) * omega_r2;
    rep.speeds = khv_speeds(geom, omega_h);
    rep.power_loss = rep.torque_p2 * std::abs(rep.speeds.omega_p2_h) -
                     rep.torque_r2 * std::abs(rep.speeds.omega_r2_h);
    rep.power_in = rep.torque_r2 * omega_r2;
    rep.power_out = rep.power_in - rep.power_loss;
  }

  rep.efficiency = rep.power_out / rep.power_in;
  rep.self_locking = drive.direction == Direction::backward && rep.efficiency <= 0.0;
  return rep;
}

namespace {

CrossCheck make_cross_check(double closed_form, double power_flow) {
  CrossCheck c;
  c.closed_form = closed_form;
  c.power_flow = power_flow;
  const double scale = std::max(std::abs(closed_form), std::abs(power_flow));
  c.relative_difference = scale > 0.0 ? std::abs(closed_form - power_flow) / scale : 0.0;
  c.flagged = c.relative_difference > 1e-9;
  return c;
}

}  // namespace

CrossCheck cross_check(const PlanetaryStageGeometry& geom, const MeshEfficiencySet& mesh,
                       Direction direction) {
  DriveCase drive{direction, 1.0, 1.0, mesh};
  const double closed = direction == Direction::forward ? planetary_forward(geom, mesh)
                                                        : planetary_backward(geom, mesh);
  return make_cross_check(closed, solve_case(geom, drive).efficiency);
}

CrossCheck cross_check(const CycloidStageGeometry& geom, const MeshEfficiencySet& mesh,
                       Direction direction) {
  DriveCase drive{direction, 1.0, 1.0, mesh};
  const double closed = direction == Direction::forward ? khv_forward(geom, mesh)
                                                        : khv_backward(geom, mesh);
  return make_cross_check(closed, solve_case(geom, drive).efficiency);
}

}  // namespace pcd
