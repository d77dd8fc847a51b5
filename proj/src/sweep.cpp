#include "pcd/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace pcd {

namespace {

double planetary_eta(Direction dir, double i, double m) {
  if (dir == Direction::forward) return (m * (i - 1.0) + 1.0) / i;
  return m * i / (i - 1.0 + m);
}

double khv_eta(Direction dir, double i, double m) {
  if (dir == Direction::forward) return 1.0 / (m + i * (1.0 - m));
  return (1.0 + i * (m - 1.0)) / m;
}

}  // namespace

double stage_efficiency(SweepStage stage, Direction direction, double ratio, double mesh_eta,
                        double split) {
  if (!(ratio >= 1.0)) throw std::invalid_argument("stage_efficiency: ratio must be >= 1");
  if (!(mesh_eta > 0.0) || !(mesh_eta <= 1.0)) {
    throw std::invalid_argument("stage_efficiency: mesh efficiency must be in (0, 1]");
  }
  switch (stage) {
    case SweepStage::planetary:
      return planetary_eta(direction, ratio, mesh_eta);
    case SweepStage::khv:
      return khv_eta(direction, ratio, mesh_eta);
    case SweepStage::compound: {
      if (!(split > 0.0) || !(split < 1.0)) {
        throw std::invalid_argument("stage_efficiency: split must be in (0, 1)");
      }
      const double i_planetary = std::pow(ratio, split);
      const double i_khv = ratio / i_planetary;
      return planetary_eta(direction, i_planetary, mesh_eta) *
             khv_eta(direction, i_khv, mesh_eta);
    }
  }
  throw std::invalid_argument("stage_efficiency: unknown stage");
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.ratio_grid.empty() || spec.mesh_grid.empty()) {
    throw std::invalid_argument("run_sweep: empty grid");
  }
  for (std::size_t k = 0; k < spec.ratio_grid.size(); ++k) {
    if (!(spec.ratio_grid[k] >= 1.0)) throw std::invalid_argument("run_sweep: ratios must be >= 1");
    if (k > 0 && !(spec.ratio_grid[k] > spec.ratio_grid[k - 1])) {
      throw std::invalid_argument("run_sweep: ratio grid must be strictly increasing");
    }
  }

  SweepResult result;
  result.spec = spec;
  result.values.reserve(spec.mesh_grid.size());
  for (double m : spec.mesh_grid) {
    std::vector<double> row;
    row.reserve(spec.ratio_grid.size());
    for (double i : spec.ratio_grid) {
      row.push_back(stage_efficiency(spec.stage, spec.direction, i, m, spec.split));
    }
    result.values.push_back(std::move(row));
  }
  return result;
}

std::vector<double> log_ratio_grid(double lo, double hi, int count) {
  if (!(lo >= 1.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("log_ratio_grid: need 1 <= lo < hi and count >= 2");
  }
  std::vector<double> grid(count);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int k = 0; k < count; ++k) {
    grid[k] = std::exp(llo + (lhi - llo) * k / (count - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace pcd
