#pragma once

#include <span>
#include <vector>

namespace dcsf {

// One row of the similarity table: a logistic curve in SNR (dB) for a
// given number of semantic symbols per word.
struct SimilarityPoint {
  double k = 1.0;
  double floor = 0.0;        // a_k, value approached at very low SNR
  double midpoint_db = 0.0;  // b_k
  double slope = 0.35;       // c_k, per dB

  friend bool operator==(const SimilarityPoint&, const SimilarityPoint&) = default;
};

/// Parametric surrogate for the sentence similarity achieved by a semantic
/// transceiver as a function of symbols-per-word k and the link SNR:
///
///   xi(k, snr) = a_k + (1 - a_k) / (1 + exp(-c_k (snr_dB - b_k)))
///
/// Rows are interpolated linearly in k and clamped outside the table. The
/// constructor rejects tables that would break monotonicity: a_k must be
/// non-decreasing and b_k non-increasing in k.
class SimilarityModel {
 public:
  explicit SimilarityModel(std::vector<SimilarityPoint> table);

  // a_k from 0.1 to 0.38, b_k from 12 dB to -4 dB, c_k = 0.35, one row per
  // integer k in [k_min, k_max].
  static SimilarityModel default_table(int k_min = 1, int k_max = 20);

  // Linear SNR. snr == 0 is treated as -inf dB and returns the floor a_k.
  double similarity(double k, double snr) const;
  double similarity_db(double k, double snr_db) const;

  SimilarityPoint row(double k) const;
  std::span<const SimilarityPoint> table() const { return table_; }

  friend bool operator==(const SimilarityModel&, const SimilarityModel&) = default;

 private:
  std::vector<SimilarityPoint> table_;
};

inline double semantic_similarity(const SimilarityModel& model, int k, double snr) {
  return model.similarity(static_cast<double>(k), snr);
}

}  // namespace dcsf
