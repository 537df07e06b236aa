#include "dcsf/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dcsf {

SimilarityModel::SimilarityModel(std::vector<SimilarityPoint> table) : table_(std::move(table)) {
  if (table_.empty()) {
    throw std::invalid_argument("similarity table is empty");
  }
  std::sort(table_.begin(), table_.end(),
            [](const SimilarityPoint& a, const SimilarityPoint& b) { return a.k < b.k; });
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto& r = table_[i];
    const std::string where = "similarity table row k=" + std::to_string(r.k);
    if (!std::isfinite(r.k) || !std::isfinite(r.floor) || !std::isfinite(r.midpoint_db) ||
        !std::isfinite(r.slope)) {
      throw std::invalid_argument(where + ": non-finite entry");
    }
    if (r.floor < 0.0 || r.floor > 1.0) {
      throw std::invalid_argument(where + ": floor a must lie in [0, 1]");
    }
    if (r.slope <= 0.0) {
      throw std::invalid_argument(where + ": slope c must be positive");
    }
    if (i > 0) {
      const auto& p = table_[i - 1];
      if (r.k == p.k) {
        throw std::invalid_argument(where + ": duplicate k");
      }
      if (r.floor < p.floor) {
        throw std::invalid_argument(where + ": floor a must be non-decreasing in k");
      }
      if (r.midpoint_db > p.midpoint_db) {
        throw std::invalid_argument(where + ": midpoint b must be non-increasing in k");
      }
    }
  }
}

SimilarityModel SimilarityModel::default_table(int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min) {
    throw std::invalid_argument("default similarity table needs 1 <= k_min <= k_max");
  }
  std::vector<SimilarityPoint> rows;
  const double span = static_cast<double>(k_max - k_min);
  for (int k = k_min; k <= k_max; ++k) {
    const double t = span > 0.0 ? static_cast<double>(k - k_min) / span : 0.0;
    rows.push_back({static_cast<double>(k), 0.1 + 0.28 * t, 12.0 - 16.0 * t, 0.35});
  }
  return SimilarityModel(std::move(rows));
}

SimilarityPoint SimilarityModel::row(double k) const {
  if (k <= table_.front().k) return table_.front();
  if (k >= table_.back().k) return table_.back();
  const auto hi = std::upper_bound(table_.begin(), table_.end(), k,
                                   [](double v, const SimilarityPoint& r) { return v < r.k; });
  const auto lo = hi - 1;
  const double t = (k - lo->k) / (hi->k - lo->k);
  auto lerp = [t](double a, double b) { return a + t * (b - a); };
  return {k, lerp(lo->floor, hi->floor), lerp(lo->midpoint_db, hi->midpoint_db),
          lerp(lo->slope, hi->slope)};
}

double SimilarityModel::similarity_db(double k, double snr_db) const {
  const SimilarityPoint r = row(k);
  if (snr_db == -std::numeric_limits<double>::infinity()) {
    return r.floor;
  }
  if (snr_db == std::numeric_limits<double>::infinity()) {
    return 1.0;
  }
  const double logistic = 1.0 / (1.0 + std::exp(-r.slope * (snr_db - r.midpoint_db)));
  return r.floor + (1.0 - r.floor) * logistic;
}

double SimilarityModel::similarity(double k, double snr) const {
  if (!(snr >= 0.0)) {
    throw std::domain_error("similarity requires a non-negative SNR");
  }
  const double snr_db =
      snr > 0.0 ? 10.0 * std::log10(snr) : -std::numeric_limits<double>::infinity();
  return similarity_db(k, snr_db);
}

}  // namespace dcsf
