#include "dcsf/energy.hpp"

#include <stdexcept>

namespace dcsf {

double flight_energy(const Position3& from, const Position3& to, const SystemParams& params) {
  const double horizontal = horizontal_distance(from, to);
  const double climb = to.z - from.z;
  double energy = 0.0;
  if (horizontal > 0.0) {
    const double v = params.cruise_speed_xy;
    energy += horizontal_power(params.rotor, v) * (horizontal / v);
  }
  if (climb > 0.0) {
    const double v = params.cruise_speed_z;
    energy += vertical_power(params.rotor, v) * (climb / v);
  }
  return energy;
}

double flight_energy(const Uav& uav, const Position3& target, const SystemParams& params) {
  return flight_energy(uav.initial_pos, target, params);
}

double total_flight_energy(const Scenario& scenario, std::span<const Position3> positions,
                           const SystemParams& params) {
  if (positions.size() != scenario.uavs.size()) {
    throw std::invalid_argument("one target position per UAV is required");
  }
  double total = 0.0;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    total += flight_energy(scenario.uavs[v], positions[v], params);
  }
  if (params.include_hover_energy) {
    total += params.hover_time_s * hover_power(params.rotor) *
             static_cast<double>(scenario.uavs.size());
  }
  return total;
}

}  // namespace dcsf
