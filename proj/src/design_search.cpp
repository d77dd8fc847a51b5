#include "pcd/design_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pcd/kinematics.hpp"

namespace pcd {

namespace {

void check_query(const DesignQuery& q) {
  if (!(q.target_ratio > 1.0)) throw std::invalid_argument("design query: target_ratio must be > 1");
  if (!(q.ratio_tolerance >= 0.0) || q.ratio_tolerance >= 0.5) {
    throw std::invalid_argument("design query: ratio_tolerance must be in [0, 0.5)");
  }
  if (q.z_s_bounds.empty() || q.z_p1_bounds.empty() || q.z_p2_bounds.empty()) {
    throw std::invalid_argument("design query: empty tooth-count bounds");
  }
  if (q.z_s_bounds.lo < 1 || q.z_p1_bounds.lo < 1 || q.z_p2_bounds.lo < 1) {
    throw std::invalid_argument("design query: tooth-count bounds must start at >= 1");
  }
  if (q.n_planets < 1) throw std::invalid_argument("design query: n_planets must be >= 1");
  require_valid(q.mesh);
}

double merit_of(const EfficiencyReport& rep, MeritDirection dir) {
  switch (dir) {
    case MeritDirection::forward:
      return rep.eta_sr2;
    case MeritDirection::backward:
      return rep.eta_r2s;
    case MeritDirection::both:
      return 0.5 * (rep.eta_sr2 + rep.eta_r2s);
  }
  return 0.0;
}

}  // namespace

std::vector<DesignCandidate> enumerate_designs(const DesignQuery& query) {
  check_query(query);

  std::vector<DesignCandidate> out;
  for (int z_s = query.z_s_bounds.lo; z_s <= query.z_s_bounds.hi; ++z_s) {
    for (int z_p1 = query.z_p1_bounds.lo; z_p1 <= query.z_p1_bounds.hi; ++z_p1) {
      const int z_r1 = z_s + 2 * z_p1;
      if (query.z_r1_bounds && !query.z_r1_bounds->contains(z_r1)) continue;
      if ((z_s + z_r1) % query.n_planets != 0) continue;
      for (int z_p2 = query.z_p2_bounds.lo; z_p2 <= query.z_p2_bounds.hi; ++z_p2) {
        const int z_r2 = z_p2 + 1;
        if (query.z_r2_bounds && !query.z_r2_bounds->contains(z_r2)) continue;

        const Rational ratio(static_cast<std::int64_t>(z_r2) * (z_s + z_r1), z_s);
        const double error = std::abs(ratio.to_double() / query.target_ratio - 1.0);
        if (error > query.ratio_tolerance) continue;

        DesignCandidate cand;
        cand.train.input_stage = {z_s, z_p1, z_r1, query.n_planets};
        cand.train.output_stage = {z_p2, z_r2};
        cand.achieved_ratio = ratio;
        cand.ratio_error = error;
        cand.report = compound_efficiencies(cand.train, query.mesh);
        if (query.forbid_self_locking && cand.report.self_locking) continue;
        cand.merit_value = merit_of(cand.report, query.merit);
        out.push_back(cand);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const DesignCandidate& a, const DesignCandidate& b) {
    if (a.merit_value != b.merit_value) return a.merit_value > b.merit_value;
    if (a.ratio_error != b.ratio_error) return a.ratio_error < b.ratio_error;
    if (a.train.output_stage.z_r2 != b.train.output_stage.z_r2) {
      return a.train.output_stage.z_r2 < b.train.output_stage.z_r2;
    }
    if (a.train.input_stage.z_s != b.train.input_stage.z_s) {
      return a.train.input_stage.z_s < b.train.input_stage.z_s;
    }
    return a.train.input_stage.z_p1 < b.train.input_stage.z_p1;
  });
  return out;
}

std::vector<DesignCandidate> pareto_front(const std::vector<DesignCandidate>& candidates) {
  std::vector<DesignCandidate> front;
  for (const auto& c : candidates) {
    bool dominated = false;
    for (const auto& other : candidates) {
      const bool no_worse = other.ratio_error <= c.ratio_error && other.merit_value >= c.merit_value;
      const bool better = other.ratio_error < c.ratio_error || other.merit_value > c.merit_value;
      if (no_worse && better) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(c);
  }
  return front;
}

}  // namespace pcd
