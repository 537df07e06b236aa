#include "dcsf/individual.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dcsf {

bool ObjectiveTriple::finite() const {
  return std::isfinite(f1) && std::isfinite(f2) && std::isfinite(f3);
}

ClusterAssignment::ClusterAssignment(std::vector<int> labels) : labels_(std::move(labels)) {}

ClusterAssignment ClusterAssignment::singletons(std::size_t n_uavs) {
  std::vector<int> labels(n_uavs);
  for (std::size_t v = 0; v < n_uavs; ++v) labels[v] = static_cast<int>(v) + 1;
  return ClusterAssignment(std::move(labels));
}

int ClusterAssignment::max_label() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

bool ClusterAssignment::is_canonical() const {
  const int top = max_label();
  std::vector<bool> seen(static_cast<std::size_t>(std::max(top, 0)) + 1, false);
  for (int l : labels_) {
    if (l < 1) return false;
    seen[static_cast<std::size_t>(l)] = true;
  }
  for (int l = 1; l <= top; ++l) {
    if (!seen[static_cast<std::size_t>(l)]) return false;
  }
  return true;
}

std::vector<int> ClusterAssignment::canonicalize() {
  std::map<int, int> remap;
  for (int l : labels_) remap.emplace(l, 0);
  std::vector<int> origin;
  origin.reserve(remap.size());
  int next = 1;
  for (auto& [old_label, new_label] : remap) {
    new_label = next++;
    origin.push_back(old_label);
  }
  for (int& l : labels_) l = remap[l];
  return origin;
}

std::vector<std::size_t> ClusterAssignment::members(int label) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<std::size_t>> ClusterAssignment::clusters() const {
  std::vector<std::vector<std::size_t>> out(n_clusters());
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    out[static_cast<std::size_t>(labels_[v] - 1)].push_back(v);
  }
  return out;
}

void ClusterAssignment::merge(int into, int absorbed) {
  const int n = max_label();
  if (into == absorbed || into < 1 || absorbed < 1 || into > n || absorbed > n) {
    throw std::invalid_argument("merge needs two distinct existing clusters");
  }
  const int survivor = into > absorbed ? into - 1 : into;
  for (int& l : labels_) {
    if (l == absorbed) {
      l = survivor;
    } else if (l > absorbed) {
      --l;
    }
  }
}

void canonicalize(Individual& ind, int fill_k) {
  const std::vector<int> origin = ind.assignment.canonicalize();
  std::vector<int> k(origin.size(), fill_k);
  for (std::size_t i = 0; i < origin.size(); ++i) {
    const auto old_index = static_cast<std::size_t>(origin[i] - 1);
    if (old_index < ind.symbols.size()) k[i] = ind.symbols[old_index];
  }
  ind.symbols = std::move(k);
}

}  // namespace dcsf
