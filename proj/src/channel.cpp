#include "dcsf/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcsf {

LinkGeometry LinkGeometry::between(const Position3& a, const Position3& b) {
  const double d = dcsf::distance(a, b);
  if (!(d > 0.0)) {
    throw std::domain_error("link endpoints coincide");
  }
  return {d, std::abs(a.z - b.z)};
}

double LinkGeometry::elevation_deg() const {
  const double ratio = std::min(height / distance, 1.0);
  return std::asin(ratio) * 180.0 / kPi;
}

double los_probability(const LinkGeometry& geom, double psi, double beta) {
  if (!(geom.distance > 0.0)) {
    throw std::domain_error("LoS probability needs a positive link distance");
  }
  return 1.0 / (1.0 + psi * std::exp(-beta * (geom.elevation_deg() - psi)));
}

double free_space_path_loss_db(double distance_m, double carrier_hz) {
  return 20.0 * std::log10(distance_m) + 20.0 * std::log10(carrier_hz) +
         20.0 * std::log10(4.0 * kPi / kSpeedOfLight);
}

double average_path_loss_db(const LinkGeometry& geom, const SystemParams& params) {
  const double p_los = los_probability(geom, params.psi, params.beta);
  const double fspl = free_space_path_loss_db(geom.distance, params.carrier_hz());
  return p_los * (fspl + params.mu_los_db) + (1.0 - p_los) * (fspl + params.mu_nlos_db);
}

namespace {

double received_power(const GroundUser& user, const Position3& uav_pos,
                      const SystemParams& params) {
  const auto geom = LinkGeometry::between(user.pos, uav_pos);
  return user.tx_power * db_to_linear_gain(average_path_loss_db(geom, params));
}

}  // namespace

double sinr_user_uav(const Scenario& scenario, std::size_t user, const Position3& uav_pos,
                     std::span<const std::size_t> cohort, const SystemParams& params) {
  if (cohort.empty()) {
    throw std::invalid_argument("SINR needs a non-empty cohort");
  }
  if (std::find(cohort.begin(), cohort.end(), user) == cohort.end()) {
    throw std::invalid_argument("user is not served by this UAV");
  }
  double signal = 0.0;
  double interference = 0.0;
  for (std::size_t u : cohort) {
    const double rx = received_power(scenario.users.at(u), uav_pos, params);
    if (u == user) {
      signal = rx;
    } else {
      interference += rx;
    }
  }
  return signal / (interference + params.noise_power_w());
}

double user_rate(double sinr, double bandwidth_hz) {
  if (sinr < 0.0) {
    throw std::domain_error("SINR must be non-negative");
  }
  return bandwidth_hz * std::log2(1.0 + sinr);
}

double sum_user_rate(const Scenario& scenario, std::span<const Position3> positions,
                     const SystemParams& params) {
  const Association assoc = associate_users(scenario, positions);
  const double noise = params.noise_power_w();
  double total = 0.0;
  std::vector<double> rx;
  std::vector<double> suffix;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const auto& cohort = assoc.users_of_uav[v];
    const std::size_t n = cohort.size();
    if (n == 0) continue;
    rx.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      rx[i] = received_power(scenario.users[cohort[i]], positions[v], params);
    }
    // Interference of user i is prefix(i) + suffix(i + 1); avoids the
    // cancellation of (total - own).
    suffix.assign(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + rx[i];
    double prefix = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sinr = rx[i] / (prefix + suffix[i + 1] + noise);
      total += user_rate(sinr, params.bandwidth_hz);
      prefix += rx[i];
    }
  }
  return total;
}

}  // namespace dcsf
