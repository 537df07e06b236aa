#pragma once

#include "dcsf/individual.hpp"
#include "dcsf/params.hpp"
#include "dcsf/scenario.hpp"

namespace dcsf {

// Normalized constraint violations. Each term is zero when satisfied:
//   bounds:     sum over UAVs and axes of excess / axis width
//   separation: sum over pairs of (d_min - d) / d_min
//   similarity: sum over clusters of xi_th - xi_c
struct ViolationReport {
  double bounds = 0.0;
  double separation = 0.0;
  double similarity = 0.0;

  double total() const { return bounds + separation + similarity; }
};

// Throws std::invalid_argument when the encoding itself is broken: wrong
// vector sizes, labels outside 1..N_V, empty clusters, or len(k) != N_cluster.
void check_structure(const Individual& ind, std::size_t n_uavs);

ObjectiveTriple compute_objectives(const Individual& ind, const Scenario& scenario,
                                   const SystemParams& params);
ViolationReport violations(const Individual& ind, const Scenario& scenario,
                           const SystemParams& params);

// Computes objectives and violation and caches them on the individual.
ObjectiveTriple evaluate(Individual& ind, const Scenario& scenario, const SystemParams& params);

// Pareto dominance for (max f1, max f2, min f3).
bool pareto_dominates(const ObjectiveTriple& a, const ObjectiveTriple& b);

// Constrained domination: feasible beats infeasible, smaller violation wins
// among infeasible, Pareto dominance among feasible.
bool dominates(const ObjectiveTriple& a, double violation_a, const ObjectiveTriple& b,
               double violation_b);
bool dominates(const Individual& a, const Individual& b);

}  // namespace dcsf
