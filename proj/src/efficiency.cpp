#include "pcd/efficiency.hpp"

namespace pcd {

double planetary_forward(const PlanetaryStageGeometry& geom, const MeshEfficiencySet& mesh) {
  require_valid(geom);
  require_valid(mesh);
  const double e = mesh.eta_sp1 * mesh.eta_p1r1;
  return (e * geom.z_r1 + geom.z_s) / static_cast<double>(geom.z_r1 + geom.z_s);
}

double planetary_backward(const PlanetaryStageGeometry& geom, const MeshEfficiencySet& mesh) {
  require_valid(geom);
  require_valid(mesh);
  const double e = mesh.eta_r1p1 * mesh.eta_p1s;
  return e * (geom.z_r1 + geom.z_s) / (geom.z_r1 + e * geom.z_s);
}

double khv_forward(const CycloidStageGeometry& geom, const MeshEfficiencySet& mesh) {
  require_valid(geom);
  require_valid(mesh);
  return (geom.z_r2 - geom.z_p2) / (geom.z_r2 - mesh.eta_r2p2 * geom.z_p2);
}

double khv_backward(const CycloidStageGeometry& geom, const MeshEfficiencySet& mesh) {
  require_valid(geom);
  require_valid(mesh);
  return (mesh.eta_p2r2 * geom.z_r2 - geom.z_p2) /
         (mesh.eta_p2r2 * (geom.z_r2 - geom.z_p2));
}

Rational self_lock_threshold(const CycloidStageGeometry& geom) {
  require_valid(geom);
  return Rational(geom.z_p2, geom.z_r2);
}

EfficiencyReport compound_efficiencies(const CompoundTrainGeometry& train,
                                       const MeshEfficiencySet& mesh) {
  EfficiencyReport r;
  r.eta_sh = planetary_forward(train.input_stage, mesh);
  r.eta_hs = planetary_backward(train.input_stage, mesh);
  r.eta_hr2 = khv_forward(train.output_stage, mesh);
  r.eta_r2h = khv_backward(train.output_stage, mesh);
  r.eta_sr2 = r.eta_sh * r.eta_hr2;
  r.eta_r2s = r.eta_r2h * r.eta_hs;
  r.self_locking = r.eta_r2s <= 0.0;
  return r;
}

}  // namespace pcd
