#pragma once

#include <string>
#include <vector>

namespace pcd {

/// Involute 2K-H input stage: sun S, planets P1, ring R1, carrier H.
/// Radii are never stored; every formula downstream uses radii only up to a
/// common scale factor, so tooth counts are the canonical representation.
struct PlanetaryStageGeometry {
  int z_s = 0;   // sun tooth count
  int z_p1 = 0;  // planet tooth count
  int z_r1 = 0;  // ring tooth count
  int n_planets = 3;
};

/// Cycloid/pin-wheel K-H-V output stage: cycloid disc P2, pin-wheel ring R2.
struct CycloidStageGeometry {
  int z_p2 = 0;  // cycloid disc tooth count
  int z_r2 = 0;  // pin count
};

/// Compound 3K-H-V train: the two stages share one carrier H.
struct CompoundTrainGeometry {
  PlanetaryStageGeometry input_stage;
  CycloidStageGeometry output_stage;
};

/// Directional per-mesh efficiencies, each in (0, 1]. The six values are
/// independent inputs; uniform() is a convenience for the common case of a
/// single assumed mesh efficiency.
struct MeshEfficiencySet {
  double eta_sp1 = 1.0;   // sun -> planet (2K-H forward)
  double eta_p1r1 = 1.0;  // planet -> ring (2K-H forward)
  double eta_r1p1 = 1.0;  // ring -> planet (2K-H backward)
  double eta_p1s = 1.0;   // planet -> sun (2K-H backward)
  double eta_r2p2 = 1.0;  // pin-wheel -> disc (K-H-V forward)
  double eta_p2r2 = 1.0;  // disc -> pin-wheel (K-H-V backward)

  static MeshEfficiencySet uniform(double eta) {
    return MeshEfficiencySet{eta, eta, eta, eta, eta, eta};
  }
};

struct ValidationResult {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct GeometryCheckOptions {
  // Angular-clearance test for adjacent planets; off by default since the
  // planet count is a free design choice.
  bool check_planet_interference = false;
};

ValidationResult validate_planetary(const PlanetaryStageGeometry& geom,
                                    const GeometryCheckOptions& opts = {});
ValidationResult validate_cycloid(const CycloidStageGeometry& geom);
ValidationResult validate_compound(const CompoundTrainGeometry& train,
                                   const GeometryCheckOptions& opts = {});
ValidationResult validate_mesh(const MeshEfficiencySet& mesh);

/// Throwing wrappers for operations whose preconditions require validity.
void require_valid(const PlanetaryStageGeometry& geom);
void require_valid(const CycloidStageGeometry& geom);
void require_valid(const CompoundTrainGeometry& train);
void require_valid(const MeshEfficiencySet& mesh);

}  // namespace pcd
