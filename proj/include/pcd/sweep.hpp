#pragma once

#include <vector>

#include "pcd/quasistatic.hpp"

namespace pcd {

enum class SweepStage { planetary, khv, compound };

/// Efficiency-versus-ratio curve family. Curves use the ratio-parametrized
/// closed forms, so no tooth-count realization is required and the ratio
/// axis is continuous. A mesh-grid scalar is the per-stage lumped mesh
/// efficiency (the product of the two 2K-H mesh values, or the single
/// K-H-V value).
struct SweepSpec {
  SweepStage stage = SweepStage::khv;
  Direction direction = Direction::forward;
  std::vector<double> ratio_grid;  // > = 1, strictly increasing
  std::vector<double> mesh_grid;   // each in (0, 1]
  double split = 0.5;              // compound only: share of ln(i) given to the 2K-H stage
};

/// values[m][r] = efficiency at mesh_grid[m], ratio_grid[r].
struct SweepResult {
  SweepSpec spec;
  std::vector<std::vector<double>> values;
};

/// Single-cell evaluation of the ratio-parametrized forms.
double stage_efficiency(SweepStage stage, Direction direction, double ratio, double mesh_eta,
                        double split = 0.5);

SweepResult run_sweep(const SweepSpec& spec);

/// Logarithmically spaced grid over [lo, hi], endpoints included.
std::vector<double> log_ratio_grid(double lo, double hi, int count);

}  // namespace pcd
