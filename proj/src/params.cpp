#include "dcsf/params.hpp"

#include <stdexcept>

namespace dcsf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void SystemParams::validate() const {
  require(bandwidth_hz > 0.0 && std::isfinite(bandwidth_hz), "bandwidth must be positive");
  require(std::isfinite(noise_density_dbm_hz), "noise density must be finite");
  require(wavelength_m > 0.0 && std::isfinite(wavelength_m), "wavelength must be positive");
  require(psi > 0.0 && beta > 0.0, "LoS constants psi and beta must be positive");
  require(std::isfinite(mu_los_db) && std::isfinite(mu_nlos_db), "excess losses must be finite");
  require(array_efficiency > 0.0 && array_efficiency <= 1.0, "array efficiency must be in (0, 1]");
  require(min_separation_m >= 0.0, "minimum separation must be non-negative");
  require(k_min >= 1 && k_min <= k_max, "symbol bounds need 1 <= k_min <= k_max");
  require(xi_threshold >= 0.0 && xi_threshold <= 1.0, "similarity threshold must be in [0, 1]");
  require(info_per_sentence > 0.0 && words_per_sentence > 0.0,
          "semantic information and words per sentence must be positive");
  require(w_min >= 0.0 && w_min < w_max, "weight bounds need 0 <= w_min < w_max");
  require(cruise_speed_xy > 0.0 && cruise_speed_z > 0.0, "cruise speeds must be positive");
  require(user_tx_power_w > 0.0 && uav_tx_power_w > 0.0, "transmit powers must be positive");
  require(hover_time_s >= 0.0, "hover time must be non-negative");
  rotor.validate();
}

}  // namespace dcsf
