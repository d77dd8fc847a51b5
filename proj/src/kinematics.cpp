#include "pcd/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace pcd {

SpeedState planetary_speeds(const PlanetaryStageGeometry& geom, double omega_s) {
  require_valid(geom);
  if (!std::isfinite(omega_s)) throw std::invalid_argument("planetary_speeds: omega_s not finite");

  const double rs = geom.z_s;
  const double rp1 = geom.z_p1;
  const double rr1 = geom.z_r1;

  SpeedState st;
  st.omega_s = omega_s;
  // Planet spin from rolling contact inside the fixed ring; consistent with
  // the carrier-frame value below through omega_p1_h = omega_p1 - omega_h.
  st.omega_p1 = -rs / (2.0 * rp1) * omega_s;
  st.omega_r1 = 0.0;
  st.omega_h = rs / (2.0 * rp1 + 2.0 * rs) * omega_s;

  st.omega_s_h = rr1 / (rr1 + rs) * omega_s;
  st.omega_p1_h = -rs * (2.0 * rp1 + rs) / (2.0 * rp1 * (rp1 + rs)) * omega_s;
  st.omega_r1_h = -rs / (rr1 + rs) * omega_s;
  st.omega_h_h = 0.0;
  return st;
}

SpeedState khv_speeds(const CycloidStageGeometry& geom, double omega_h) {
  require_valid(geom);
  if (!std::isfinite(omega_h)) throw std::invalid_argument("khv_speeds: omega_h not finite");

  const double rp2 = geom.z_p2;
  const double rr2 = geom.z_r2;

  SpeedState st;
  st.omega_h = omega_h;
  st.omega_r2 = (rr2 - rp2) / rr2 * omega_h;
  st.omega_p2 = 0.0;

  st.omega_h_h = 0.0;
  st.omega_r2_h = -rp2 / rr2 * omega_h;
  st.omega_p2_h = -omega_h;
  return st;
}

Rational planetary_ratio(const PlanetaryStageGeometry& geom) {
  if (geom.z_s < 1 || geom.z_r1 < 1) {
    throw std::invalid_argument("planetary_ratio: tooth counts must be positive");
  }
  return Rational(geom.z_s + geom.z_r1, geom.z_s);
}

Rational khv_ratio(const CycloidStageGeometry& geom) {
  if (geom.z_p2 < 1 || geom.z_r2 <= geom.z_p2) {
    throw std::invalid_argument("khv_ratio: requires z_r2 > z_p2 >= 1");
  }
  return Rational(geom.z_r2, geom.z_r2 - geom.z_p2);
}

Rational compound_ratio(const CompoundTrainGeometry& train) {
  return planetary_ratio(train.input_stage) * khv_ratio(train.output_stage);
}

}  // namespace pcd
