#pragma once

namespace dcsf {

// Rotary-wing propulsion constants. Defaults are the commonly used values for
// a small quadrotor; every field must be strictly positive.
struct RotorModel {
  double blade_profile_power = 79.86;  // P0, W
  double induced_power = 88.63;        // P_ind, W
  double tip_speed = 120.0;            // V_tip, m/s
  double induced_velocity = 4.03;      // V_ind, mean induced velocity in hover, m/s
  double fuselage_drag_ratio = 0.6;    // d0
  double air_density = 1.225;          // rho, kg/m^3
  double rotor_solidity = 0.05;        // s
  double disk_area = 0.503;            // A, m^2
  double weight = 20.0;                // W = m g, N

  void validate() const;

  friend bool operator==(const RotorModel&, const RotorModel&) = default;
};

// Induced, blade-profile and parasite power at horizontal speed v (m/s).
double induced_power(const RotorModel& rotor, double v);
double blade_profile_power(const RotorModel& rotor, double v);
double parasite_power(const RotorModel& rotor, double v);
double horizontal_power(const RotorModel& rotor, double v);

// W * v for climbing, zero for v <= 0.
double vertical_power(const RotorModel& rotor, double v);

inline double hover_power(const RotorModel& rotor) {
  return rotor.induced_power + rotor.blade_profile_power;
}

}  // namespace dcsf
