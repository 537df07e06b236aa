#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcsf/geometry.hpp"
#include "dcsf/params.hpp"

namespace dcsf {

struct GroundUser {
  std::size_t id = 0;
  Position3 pos;  // z = 0
  double tx_power = 0.1;
};

struct Uav {
  std::size_t id = 0;
  Position3 pos;
  Position3 initial_pos;  // launch point, start of the relocation flight
  double tx_power = 0.1;
};

struct Scenario {
  std::vector<GroundUser> users;
  std::vector<Uav> uavs;
  Position3 bs_pos;
  Bounds bounds;
  std::uint64_t seed = 0;

  std::size_t n_users() const { return users.size(); }
  std::size_t n_uavs() const { return uavs.size(); }
  std::vector<Position3> uav_positions() const;
  std::vector<Position3> initial_positions() const;

  // Throws std::invalid_argument if a structural invariant is broken.
  void check() const;
};

// N points on x = x_min, evenly spaced in y, at altitude z_min.
std::vector<Position3> launch_grid(const Bounds& bounds, std::size_t n);

// Users uniform on the ground inside bounds; UAVs parked on the launch grid.
Scenario generate_scenario(std::size_t n_users, std::size_t n_uavs, const Bounds& bounds,
                           const Position3& bs_pos, std::uint64_t seed,
                           double user_tx_power = 0.1, double uav_tx_power = 0.1);

// Square area [0, side]^2 with the given altitude band.
Bounds square_area(double side, double z_min, double z_max);

struct Association {
  std::vector<std::size_t> uav_of_user;
  std::vector<std::vector<std::size_t>> users_of_uav;
};

// Nearest UAV by 3D distance; ties go to the lower UAV index.
Association associate_users(const Scenario& scenario, std::span<const Position3> positions);

struct DeploymentViolation {
  enum class Kind { OutOfBounds, TooClose };
  Kind kind = Kind::OutOfBounds;
  std::size_t first = 0;
  std::size_t second = 0;  // only meaningful for TooClose
  double amount = 0.0;     // excess in meters, or separation shortfall in meters
  std::string message;
};

// Every UAV outside R and every pair closer than d_min.
std::vector<DeploymentViolation> validate_deployment(const Scenario& scenario,
                                                     std::span<const Position3> positions,
                                                     const SystemParams& params);
std::vector<DeploymentViolation> validate_scenario(const Scenario& scenario,
                                                   const SystemParams& params);

}  // namespace dcsf
