#include "pcd/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcd {

namespace {

void append(ValidationResult& r, std::string msg) { r.violations.push_back(std::move(msg)); }

}  // namespace

ValidationResult validate_planetary(const PlanetaryStageGeometry& geom,
                                    const GeometryCheckOptions& opts) {
  ValidationResult r;
  if (geom.z_s < 1 || geom.z_p1 < 1 || geom.z_r1 < 1) {
    append(r, "positive tooth counts: z_s, z_p1, z_r1 must all be >= 1");
  }
  if (geom.n_planets < 1) {
    append(r, "positive planet count: n_planets must be >= 1");
  }
  if (!r.violations.empty()) return r;

  if (geom.z_r1 != geom.z_s + 2 * geom.z_p1) {
    append(r, "coaxiality: z_r1 = z_s + 2*z_p1 required, got z_r1=" + std::to_string(geom.z_r1) +
                  " but z_s + 2*z_p1 = " + std::to_string(geom.z_s + 2 * geom.z_p1));
  }
  if ((geom.z_s + geom.z_r1) % geom.n_planets != 0) {
    append(r, "assembly: (z_s + z_r1) mod n_planets = 0 required for equally spaced planets, got (" +
                  std::to_string(geom.z_s) + " + " + std::to_string(geom.z_r1) + ") mod " +
                  std::to_string(geom.n_planets));
  }
  if (opts.check_planet_interference && geom.n_planets >= 2) {
    const double clearance =
        (geom.z_s + geom.z_p1) * std::sin(std::numbers::pi / geom.n_planets);
    if (!(geom.z_p1 + 2 < clearance)) {
      append(r, "planet interference: z_p1 + 2 < (z_s + z_p1)*sin(pi/n_planets) required");
    }
  }
  return r;
}

ValidationResult validate_cycloid(const CycloidStageGeometry& geom) {
  ValidationResult r;
  if (geom.z_p2 < 1) {
    append(r, "positive tooth counts: z_p2 must be >= 1");
  }
  if (geom.z_r2 - geom.z_p2 != 1) {
    append(r, "one-tooth difference: z_r2 - z_p2 = 1 required, got " +
                  std::to_string(geom.z_r2 - geom.z_p2));
  }
  return r;
}

ValidationResult validate_compound(const CompoundTrainGeometry& train,
                                   const GeometryCheckOptions& opts) {
  ValidationResult r = validate_planetary(train.input_stage, opts);
  ValidationResult c = validate_cycloid(train.output_stage);
  r.violations.insert(r.violations.end(), c.violations.begin(), c.violations.end());
  return r;
}

ValidationResult validate_mesh(const MeshEfficiencySet& mesh) {
  ValidationResult r;
  const struct {
    const char* name;
    double value;
  } entries[] = {{"eta_sp1", mesh.eta_sp1},   {"eta_p1r1", mesh.eta_p1r1},
                 {"eta_r1p1", mesh.eta_r1p1}, {"eta_p1s", mesh.eta_p1s},
                 {"eta_r2p2", mesh.eta_r2p2}, {"eta_p2r2", mesh.eta_p2r2}};
  for (const auto& e : entries) {
    if (!(e.value > 0.0) || !(e.value <= 1.0)) {
      append(r, std::string("mesh efficiency range: ") + e.name + " must be in (0, 1]");
    }
  }
  return r;
}

namespace {

[[noreturn]] void throw_violations(const char* what, const ValidationResult& r) {
  std::string msg(what);
  for (const auto& v : r.violations) {
    msg += "; ";
    msg += v;
  }
  throw std::invalid_argument(msg);
}

}  // namespace

void require_valid(const PlanetaryStageGeometry& geom) {
  const auto r = validate_planetary(geom);
  if (!r.ok()) throw_violations("invalid 2K-H geometry", r);
}

void require_valid(const CycloidStageGeometry& geom) {
  const auto r = validate_cycloid(geom);
  if (!r.ok()) throw_violations("invalid K-H-V geometry", r);
}

void require_valid(const CompoundTrainGeometry& train) {
  const auto r = validate_compound(train);
  if (!r.ok()) throw_violations("invalid 3K-H-V geometry", r);
}

void require_valid(const MeshEfficiencySet& mesh) {
  const auto r = validate_mesh(mesh);
  if (!r.ok()) throw_violations("invalid mesh efficiencies", r);
}

}  // namespace pcd
