#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcd/design_search.hpp"
#include "pcd/geometry.hpp"
#include "pcd/sweep.hpp"

namespace pcd {

/// Configuration or input-file problem: unreadable, unparsable, or a field
/// with the wrong type/name. Distinct from constraint violations, which are
/// raised as std::invalid_argument by the analysis modules.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OperatingPoint {
  double input_torque_nm = 0.0;
  double input_speed_rad_s = 0.0;
};

struct AnalysisConfig {
  CompoundTrainGeometry train;
  MeshEfficiencySet mesh;
  std::optional<OperatingPoint> operating_point;
};

enum class OutputFormat { json, csv };

AnalysisConfig parse_analysis_config(const std::string& text);
SweepSpec parse_sweep_spec(const std::string& text);
DesignQuery parse_design_query(const std::string& text);

/// Fixed 9-significant-digit, locale-independent decimal formatting used for
/// every number the tool emits.
std::string format_sig9(double value);
/// The same rounding applied to the value itself, for deterministic JSON.
double round_sig9(double value);

/// Validates the train, computes ratios/efficiencies and (when an operating
/// point is present) the chained quasi-static power flow, and renders the
/// report. Throws std::invalid_argument on constraint violations.
std::string render_analysis(const AnalysisConfig& config, OutputFormat format);

std::string render_sweep(const SweepResult& result, OutputFormat format);

std::string render_search(const DesignQuery& query, const std::vector<DesignCandidate>& candidates,
                          OutputFormat format);

}  // namespace pcd
