#include "dcsf/rotor.hpp"

#include <cmath>
#include <stdexcept>

namespace dcsf {

void RotorModel::validate() const {
  const double fields[] = {blade_profile_power, induced_power,    tip_speed,
                           induced_velocity,    fuselage_drag_ratio, air_density,
                           rotor_solidity,      disk_area,        weight};
  for (double f : fields) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw std::invalid_argument("rotor model constants must be finite and positive");
    }
  }
}

double induced_power(const RotorModel& rotor, double v) {
  const double v2 = v * v;
  const double vi2 = rotor.induced_velocity * rotor.induced_velocity;
  const double inner = std::sqrt(1.0 + v2 * v2 / (4.0 * vi2 * vi2)) - v2 / (2.0 * vi2);
  // inner is positive analytically; the subtraction can round below zero at
  // very high speed.
  return rotor.induced_power * std::sqrt(std::max(inner, 0.0));
}

double blade_profile_power(const RotorModel& rotor, double v) {
  return rotor.blade_profile_power * (1.0 + 3.0 * v * v / (rotor.tip_speed * rotor.tip_speed));
}

double parasite_power(const RotorModel& rotor, double v) {
  return 0.5 * rotor.fuselage_drag_ratio * rotor.air_density * rotor.rotor_solidity *
         rotor.disk_area * v * v * v;
}

double horizontal_power(const RotorModel& rotor, double v) {
  if (v < 0.0) {
    throw std::domain_error("horizontal speed must be non-negative");
  }
  return induced_power(rotor, v) + blade_profile_power(rotor, v) + parasite_power(rotor, v);
}

double vertical_power(const RotorModel& rotor, double v) {
  return v > 0.0 ? rotor.weight * v : 0.0;
}

}  // namespace dcsf
