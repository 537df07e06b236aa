#pragma once

#include <cstddef>
#include <span>

#include "dcsf/geometry.hpp"
#include "dcsf/params.hpp"
#include "dcsf/scenario.hpp"

namespace dcsf {

// Total and vertical separation of an air-to-ground link.
struct LinkGeometry {
  double distance = 0.0;  // d, meters
  double height = 0.0;    // H, meters

  // Throws std::domain_error when the endpoints coincide.
  static LinkGeometry between(const Position3& a, const Position3& b);
  double elevation_deg() const;
};

// Probabilistic line-of-sight model: 1 / (1 + psi exp(-beta (theta_deg - psi))).
double los_probability(const LinkGeometry& geom, double psi, double beta);

double free_space_path_loss_db(double distance_m, double carrier_hz);

// P_LoS * L_LoS + P_NLoS * L_NLoS in dB.
double average_path_loss_db(const LinkGeometry& geom, const SystemParams& params);

inline double db_to_linear_gain(double loss_db) { return std::pow(10.0, -loss_db / 10.0); }

// SINR of `user` at the UAV located at `uav_pos`; `cohort` is the set of users
// served by that UAV and must contain `user`. Throws std::invalid_argument on
// an empty cohort or a user outside it.
double sinr_user_uav(const Scenario& scenario, std::size_t user, const Position3& uav_pos,
                     std::span<const std::size_t> cohort, const SystemParams& params);

// Shannon rate B log2(1 + sinr).
double user_rate(double sinr, double bandwidth_hz);

// Objective f1: total rate of all users under nearest-UAV association.
double sum_user_rate(const Scenario& scenario, std::span<const Position3> positions,
                     const SystemParams& params);

}  // namespace dcsf
