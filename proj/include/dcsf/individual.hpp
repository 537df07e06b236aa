#pragma once

#include <cstddef>
#include <vector>

#include "dcsf/geometry.hpp"

namespace dcsf {

// f1 total user rate (bps, maximized), f2 total semantic rate (suts/s,
// maximized), f3 total flight energy (J, minimized).
struct ObjectiveTriple {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;

  bool finite() const;
  friend bool operator==(const ObjectiveTriple&, const ObjectiveTriple&) = default;
};

/// Cluster label per UAV. Labels are 1-based. In canonical form the labels
/// in use are exactly 1..n_clusters(), preserving the relative order of the
/// original labels, so that n_clusters() == max(label).
class ClusterAssignment {
 public:
  ClusterAssignment() = default;
  explicit ClusterAssignment(std::vector<int> labels);

  // Every UAV in its own cluster.
  static ClusterAssignment singletons(std::size_t n_uavs);

  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t uav) const { return labels_[uav]; }
  std::size_t size() const { return labels_.size(); }

  int max_label() const;
  std::size_t n_clusters() const { return static_cast<std::size_t>(max_label()); }
  bool is_canonical() const;

  // Compresses labels to 1..n keeping their order. Returns, for every new
  // label (0-based), the old label it came from.
  std::vector<int> canonicalize();

  // UAV indices of cluster `label` (1-based), ascending.
  std::vector<std::size_t> members(int label) const;
  std::vector<std::vector<std::size_t>> clusters() const;

  // Moves every UAV of cluster `absorbed` into `into` and re-numbers the
  // labels above `absorbed` down by one. Requires canonical form.
  void merge(int into, int absorbed);

  friend bool operator==(const ClusterAssignment&, const ClusterAssignment&) = default;

 private:
  std::vector<int> labels_;
};

// One candidate solution {c, Q, w, k} with its cached evaluation.
struct Individual {
  ClusterAssignment assignment;
  std::vector<Position3> positions;  // one per UAV
  std::vector<double> weights;       // one per UAV
  std::vector<int> symbols;          // k, one per cluster
  ObjectiveTriple objectives;
  double violation = 0.0;
  bool evaluated = false;

  bool feasible() const { return violation <= 0.0; }
  std::size_t n_uavs() const { return positions.size(); }
};

// Canonicalizes the assignment and rebuilds k to follow the new labels.
// Newly appearing clusters (none for pure re-labelling) get `fill_k`.
void canonicalize(Individual& ind, int fill_k);

}  // namespace dcsf
