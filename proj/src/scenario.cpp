#include "dcsf/scenario.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace dcsf {

std::vector<Position3> Scenario::uav_positions() const {
  std::vector<Position3> out;
  out.reserve(uavs.size());
  for (const auto& u : uavs) out.push_back(u.pos);
  return out;
}

std::vector<Position3> Scenario::initial_positions() const {
  std::vector<Position3> out;
  out.reserve(uavs.size());
  for (const auto& u : uavs) out.push_back(u.initial_pos);
  return out;
}

void Scenario::check() const {
  if (users.empty()) throw std::invalid_argument("scenario needs at least one user");
  if (uavs.empty()) throw std::invalid_argument("scenario needs at least one UAV");
  if (!bounds.well_ordered()) throw std::invalid_argument("scenario bounds are not well ordered");
  if (!is_finite(bs_pos)) throw std::invalid_argument("base station position is not finite");
  for (const auto& u : users) {
    if (!is_finite(u.pos) || !bounds.contains_ground(u.pos)) {
      throw std::invalid_argument("user " + std::to_string(u.id) + " lies outside the area");
    }
    if (!(u.tx_power > 0.0)) {
      throw std::invalid_argument("user " + std::to_string(u.id) + " has non-positive power");
    }
  }
  for (const auto& v : uavs) {
    if (!is_finite(v.pos) || !is_finite(v.initial_pos)) {
      throw std::invalid_argument("UAV " + std::to_string(v.id) + " has a non-finite position");
    }
    if (!(v.tx_power > 0.0)) {
      throw std::invalid_argument("UAV " + std::to_string(v.id) + " has non-positive power");
    }
  }
}

Bounds square_area(double side, double z_min, double z_max) {
  return Bounds{{0.0, side}, {0.0, side}, {z_min, z_max}};
}

std::vector<Position3> launch_grid(const Bounds& bounds, std::size_t n) {
  std::vector<Position3> grid;
  grid.reserve(n);
  const double step = bounds.y.width() / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid.push_back({bounds.x.min, bounds.y.min + (static_cast<double>(i) + 0.5) * step,
                    bounds.z.min});
  }
  return grid;
}

Scenario generate_scenario(std::size_t n_users, std::size_t n_uavs, const Bounds& bounds,
                           const Position3& bs_pos, std::uint64_t seed, double user_tx_power,
                           double uav_tx_power) {
  if (n_users < 1 || n_uavs < 1) {
    throw std::invalid_argument("need at least one user and one UAV");
  }
  if (!bounds.well_ordered()) {
    throw std::invalid_argument("bounds must satisfy min < max on every axis");
  }
  Scenario s;
  s.bounds = bounds;
  s.bs_pos = bs_pos;
  s.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(bounds.x.min, bounds.x.max);
  std::uniform_real_distribution<double> uy(bounds.y.min, bounds.y.max);
  s.users.reserve(n_users);
  for (std::size_t i = 0; i < n_users; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    s.users.push_back({i, {x, y, 0.0}, user_tx_power});
  }
  const auto grid = launch_grid(bounds, n_uavs);
  s.uavs.reserve(n_uavs);
  for (std::size_t v = 0; v < n_uavs; ++v) {
    s.uavs.push_back({v, grid[v], grid[v], uav_tx_power});
  }
  s.check();
  return s;
}

Association associate_users(const Scenario& scenario, std::span<const Position3> positions) {
  if (positions.empty()) {
    throw std::invalid_argument("association needs at least one UAV position");
  }
  Association a;
  a.uav_of_user.resize(scenario.users.size());
  a.users_of_uav.resize(positions.size());
  for (std::size_t u = 0; u < scenario.users.size(); ++u) {
    const Position3& p = scenario.users[u].pos;
    std::size_t best = 0;
    double best_d = distance(p, positions[0]);
    for (std::size_t v = 1; v < positions.size(); ++v) {
      const double d = distance(p, positions[v]);
      if (d < best_d) {
        best = v;
        best_d = d;
      }
    }
    a.uav_of_user[u] = best;
    a.users_of_uav[best].push_back(u);
  }
  return a;
}

std::vector<DeploymentViolation> validate_deployment(const Scenario& scenario,
                                                     std::span<const Position3> positions,
                                                     const SystemParams& params) {
  std::vector<DeploymentViolation> out;
  const Bounds& b = scenario.bounds;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    const Position3& p = positions[v];
    const double excess = b.x.excess(p.x) + b.y.excess(p.y) + b.z.excess(p.z);
    if (excess > 0.0 || !is_finite(p)) {
      std::ostringstream msg;
      msg << "C1: UAV " << v << " at (" << p.x << ", " << p.y << ", " << p.z
          << ") lies outside the deployment region";
      out.push_back({DeploymentViolation::Kind::OutOfBounds, v, v, excess, msg.str()});
    }
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      const double d = distance(positions[i], positions[j]);
      if (d < params.min_separation_m) {
        std::ostringstream msg;
        msg << "C2: UAVs " << i << " and " << j << " are " << d << " m apart (minimum "
            << params.min_separation_m << " m)";
        out.push_back({DeploymentViolation::Kind::TooClose, i, j, params.min_separation_m - d,
                       msg.str()});
      }
    }
  }
  return out;
}

std::vector<DeploymentViolation> validate_scenario(const Scenario& scenario,
                                                   const SystemParams& params) {
  const auto q = scenario.uav_positions();
  return validate_deployment(scenario, q, params);
}

}  // namespace dcsf
