#include "dcsf/semantic.hpp"

#include <stdexcept>

#include "dcsf/beamforming.hpp"

namespace dcsf {

double semantic_rate(const SimilarityModel& model, int k, double snr, const SystemParams& params) {
  if (k < 1) throw std::domain_error("symbols per word must be at least 1");
  const double xi = model.similarity(static_cast<double>(k), snr);
  return params.bandwidth_hz * params.info_per_sentence /
         (static_cast<double>(k) * params.words_per_sentence) * xi;
}

std::vector<ClusterLink> cluster_links(const Scenario& scenario, const Individual& ind,
                                       const SystemParams& params) {
  const auto groups = ind.assignment.clusters();
  if (groups.size() != ind.symbols.size()) {
    throw std::invalid_argument("symbol vector length differs from the cluster count");
  }
  std::vector<ClusterLink> links;
  links.reserve(groups.size());
  for (std::size_t c = 0; c < groups.size(); ++c) {
    ClusterLink link;
    link.snr = cluster_snr(scenario, groups[c], ind.positions, ind.weights, params);
    const int k = ind.symbols[c];
    link.similarity = params.similarity.similarity(static_cast<double>(k), link.snr);
    link.rate = params.bandwidth_hz * params.info_per_sentence /
                (static_cast<double>(k) * params.words_per_sentence) * link.similarity;
    links.push_back(link);
  }
  return links;
}

double sum_semantic_rate(const Scenario& scenario, const Individual& ind,
                         const SystemParams& params) {
  double total = 0.0;
  for (const auto& link : cluster_links(scenario, ind, params)) total += link.rate;
  return total;
}

}  // namespace dcsf
