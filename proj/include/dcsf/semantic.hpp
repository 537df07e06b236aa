#pragma once

#include <cstddef>
#include <vector>

#include "dcsf/individual.hpp"
#include "dcsf/params.hpp"
#include "dcsf/scenario.hpp"
#include "dcsf/similarity.hpp"

namespace dcsf {

// B I / (k L) * xi(k, snr), in suts/s.
double semantic_rate(const SimilarityModel& model, int k, double snr, const SystemParams& params);

struct ClusterLink {
  double snr = 0.0;
  double similarity = 0.0;
  double rate = 0.0;
};

// Per-cluster SNR, similarity and semantic rate, in label order.
std::vector<ClusterLink> cluster_links(const Scenario& scenario, const Individual& ind,
                                       const SystemParams& params);

// Objective f2.
double sum_semantic_rate(const Scenario& scenario, const Individual& ind,
                         const SystemParams& params);

}  // namespace dcsf
