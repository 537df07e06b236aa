#pragma once

#include <cmath>

#include "dcsf/geometry.hpp"
#include "dcsf/rotor.hpp"
#include "dcsf/similarity.hpp"

namespace dcsf {

// How the symbol-count constraint that compares f1 with f2 is interpreted.
//   AlwaysOptimize: k is always searched over [k_min, k_max].
//   LiteralCompare: k is searched only while f1 > f2, otherwise left as is.
enum class C7Mode { AlwaysOptimize, LiteralCompare };

// Every physical and model constant used by the objectives. Values in the
// defaults are the scenario from the 500-user / 8-UAV setup; the semantic
// and rotor constants are configurable stand-ins.
struct SystemParams {
  double bandwidth_hz = 2.0e6;
  double noise_density_dbm_hz = -174.0;
  double wavelength_m = 0.125;  // carrier frequency is derived from it
  double psi = 9.61;
  double beta = 0.16;
  double mu_los_db = 1.6;
  double mu_nlos_db = 20.0;
  double array_efficiency = 1.0;  // eta
  double min_separation_m = 10.0;
  int k_min = 1;
  int k_max = 20;
  double xi_threshold = 0.1;
  double info_per_sentence = 40.0;   // I, suts per sentence
  double words_per_sentence = 20.0;  // L
  double w_min = 0.0;
  double w_max = 1.0;
  double cruise_speed_xy = 10.0;  // m/s
  double cruise_speed_z = 2.0;    // m/s
  double user_tx_power_w = 0.1;
  double uav_tx_power_w = 0.1;
  bool include_hover_energy = false;
  double hover_time_s = 0.0;
  C7Mode c7_mode = C7Mode::AlwaysOptimize;
  RotorModel rotor;
  SimilarityModel similarity = SimilarityModel::default_table();

  double carrier_hz() const { return kSpeedOfLight / wavelength_m; }
  double phase_constant() const { return 2.0 * kPi / wavelength_m; }
  double noise_density_w_hz() const { return std::pow(10.0, (noise_density_dbm_hz - 30.0) / 10.0); }
  // B * N0 in watts.
  double noise_power_w() const { return bandwidth_hz * noise_density_w_hz(); }

  // Throws std::invalid_argument naming the first broken invariant.
  void validate() const;
};

}  // namespace dcsf
