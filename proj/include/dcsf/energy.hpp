#pragma once

#include <span>

#include "dcsf/geometry.hpp"
#include "dcsf/params.hpp"
#include "dcsf/rotor.hpp"
#include "dcsf/scenario.hpp"

namespace dcsf {

// Relocation flight along a horizontal leg at cruise_speed_xy and a vertical
// leg at cruise_speed_z. Descending costs nothing on the vertical leg.
double flight_energy(const Position3& from, const Position3& to, const SystemParams& params);
double flight_energy(const Uav& uav, const Position3& target, const SystemParams& params);

// Objective f3: sum over UAVs, plus hover_time * P(0) * N_V when
// include_hover_energy is set.
double total_flight_energy(const Scenario& scenario, std::span<const Position3> positions,
                           const SystemParams& params);

}  // namespace dcsf
