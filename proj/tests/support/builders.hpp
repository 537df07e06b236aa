#pragma once

#include <cstdint>
#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <stdexcept>
#include <vector>

#include "dcsf/individual.hpp"
#include "dcsf/params.hpp"
#include "dcsf/problem.hpp"
#include "dcsf/scenario.hpp"

namespace testutil {

inline dcsf::Scenario small_scenario(std::size_t users, std::size_t uavs, std::uint64_t seed,
                                     double side = 500.0) {
  return dcsf::generate_scenario(users, uavs, dcsf::square_area(side, 60.0, 120.0),
                                 {1000.0, 1000.0, 0.0}, seed);
}

// Random but structurally valid individual, evaluated.
inline dcsf::Individual random_individual(const dcsf::Scenario& s, const dcsf::SystemParams& prm,
                                          std::mt19937_64& rng) {
  const std::size_t n = s.n_uavs();
  std::uniform_int_distribution<int> label(1, static_cast<int>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kk(prm.k_min, prm.k_max);
  dcsf::Individual ind;
  std::vector<int> labels(n);
  for (auto& l : labels) l = label(rng);
  ind.assignment = dcsf::ClusterAssignment(labels);
  ind.assignment.canonicalize();
  const auto& b = s.bounds;
  for (std::size_t v = 0; v < n; ++v) {
    ind.positions.push_back({b.x.min + unit(rng) * b.x.width(), b.y.min + unit(rng) * b.y.width(),
                             b.z.min + unit(rng) * b.z.width()});
    ind.weights.push_back(unit(rng));
  }
  for (std::size_t c = 0; c < ind.assignment.n_clusters(); ++c) ind.symbols.push_back(kk(rng));
  dcsf::evaluate(ind, s, prm);
  return ind;
}

inline double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Random instance in the regime where merging clusters can pay off: a BS
// 1.5 to 2.5 km away leaves singleton links at moderate SNR, and small k with
// strong weights lets the array gain lift the similarity.
inline std::pair<dcsf::Scenario, dcsf::Individual> merge_prone_instance(
    std::size_t n_uavs, std::uint64_t seed, const dcsf::SystemParams& prm, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto s = dcsf::generate_scenario(5, n_uavs, dcsf::square_area(500, 60, 120), {0, 0, 0}, seed);
  const double d = 1500.0 + 1000.0 * unit(rng);
  const double angle = 2.0 * dcsf::kPi * unit(rng);
  s.bs_pos = {250.0 + d * std::cos(angle), 250.0 + d * std::sin(angle), 0.0};
  auto ind = random_individual(s, prm, rng);
  for (auto& w : ind.weights) w = 0.6 + 0.4 * unit(rng);
  std::uniform_int_distribution<int> k(prm.k_min, std::min(prm.k_min + 2, prm.k_max));
  for (auto& x : ind.symbols) x = k(rng);
  dcsf::evaluate(ind, s, prm);
  return {s, ind};
}

}  // namespace testutil
