#include "dcsf/problem.hpp"

#include <stdexcept>
#include <string>

#include "dcsf/channel.hpp"
#include "dcsf/energy.hpp"
#include "dcsf/semantic.hpp"

namespace dcsf {

void check_structure(const Individual& ind, std::size_t n_uavs) {
  const auto& labels = ind.assignment.labels();
  if (labels.size() != n_uavs || ind.positions.size() != n_uavs || ind.weights.size() != n_uavs) {
    throw std::invalid_argument("individual must carry one label, position and weight per UAV");
  }
  for (int l : labels) {
    if (l < 1 || static_cast<std::size_t>(l) > n_uavs) {
      throw std::invalid_argument("cluster label " + std::to_string(l) + " outside 1.." +
                                  std::to_string(n_uavs));
    }
  }
  if (!ind.assignment.is_canonical()) {
    throw std::invalid_argument("cluster labels are not consecutive (empty cluster)");
  }
  if (ind.symbols.size() != ind.assignment.n_clusters()) {
    throw std::invalid_argument("k has " + std::to_string(ind.symbols.size()) +
                                " entries for " + std::to_string(ind.assignment.n_clusters()) +
                                " clusters");
  }
}

ObjectiveTriple compute_objectives(const Individual& ind, const Scenario& scenario,
                                   const SystemParams& params) {
  check_structure(ind, scenario.n_uavs());
  return {sum_user_rate(scenario, ind.positions, params),
          sum_semantic_rate(scenario, ind, params),
          total_flight_energy(scenario, ind.positions, params)};
}

ViolationReport violations(const Individual& ind, const Scenario& scenario,
                           const SystemParams& params) {
  check_structure(ind, scenario.n_uavs());
  ViolationReport r;
  const Bounds& b = scenario.bounds;
  for (const auto& p : ind.positions) {
    r.bounds += b.x.excess(p.x) / b.x.width() + b.y.excess(p.y) / b.y.width() +
                b.z.excess(p.z) / b.z.width();
  }
  if (params.min_separation_m > 0.0) {
    for (std::size_t i = 0; i < ind.positions.size(); ++i) {
      for (std::size_t j = i + 1; j < ind.positions.size(); ++j) {
        const double d = distance(ind.positions[i], ind.positions[j]);
        if (d < params.min_separation_m) {
          r.separation += (params.min_separation_m - d) / params.min_separation_m;
        }
      }
    }
  }
  for (const auto& link : cluster_links(scenario, ind, params)) {
    if (link.similarity < params.xi_threshold) {
      r.similarity += params.xi_threshold - link.similarity;
    }
  }
  return r;
}

ObjectiveTriple evaluate(Individual& ind, const Scenario& scenario, const SystemParams& params) {
  ind.objectives = compute_objectives(ind, scenario, params);
  ind.violation = violations(ind, scenario, params).total();
  ind.evaluated = true;
  return ind.objectives;
}

bool pareto_dominates(const ObjectiveTriple& a, const ObjectiveTriple& b) {
  const bool no_worse = a.f1 >= b.f1 && a.f2 >= b.f2 && a.f3 <= b.f3;
  const bool better = a.f1 > b.f1 || a.f2 > b.f2 || a.f3 < b.f3;
  return no_worse && better;
}

bool dominates(const ObjectiveTriple& a, double violation_a, const ObjectiveTriple& b,
               double violation_b) {
  const bool fa = violation_a <= 0.0;
  const bool fb = violation_b <= 0.0;
  if (fa && !fb) return true;
  if (!fa && fb) return false;
  if (!fa && !fb) return violation_a < violation_b;
  return pareto_dominates(a, b);
}

bool dominates(const Individual& a, const Individual& b) {
  return dominates(a.objectives, a.violation, b.objectives, b.violation);
}

}  // namespace dcsf
