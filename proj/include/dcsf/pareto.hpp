#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dcsf/individual.hpp"

namespace dcsf {

using Fronts = std::vector<std::vector<std::size_t>>;

// Fast non-dominated sort under an arbitrary strict partial order.
// Front members are listed in ascending index order.
Fronts nondominated_sort(std::size_t n,
                         const std::function<bool(std::size_t, std::size_t)>& dominates);

// Constrained non-dominated sort of a pool of evaluated individuals.
Fronts nondominated_sort(std::span<const Individual> pool);

/// Crowding distance of each point within one front. Fronts of size <= 2
/// are all +inf. Per objective, points holding the minimum or maximum value
/// get +inf; every other point adds (next larger value - next smaller value)
/// / (max - min). Objectives with zero range contribute nothing. Using
/// distinct neighbouring values keeps the result independent of the order
/// in which the front is listed.
std::vector<double> crowding_distance(std::span<const ObjectiveTriple> front);

// Orders a pool by (front rank, crowding distance descending, index) and
// returns the first `keep` indices.
std::vector<std::size_t> select_best(std::span<const Individual> pool, std::size_t keep);

// Rank (0-based front index) and crowding distance per pool member.
struct RankInfo {
  std::vector<std::size_t> rank;
  std::vector<double> crowding;
};
RankInfo rank_pool(std::span<const Individual> pool);

/// Affine map from objective space to a unit cube where every coordinate is
/// minimized: ideal -> 0, nadir -> 1. Coordinates are (-f1, -f2, f3).
/// Degenerate axes (nadir == ideal) map to 0.
struct ObjectiveFrame {
  std::array<double, 3> ideal{};  // best value per minimized coordinate
  std::array<double, 3> nadir{};  // worst value per minimized coordinate

  static ObjectiveFrame from_points(std::span<const ObjectiveTriple> points);
  static ObjectiveFrame from_points(std::span<const ObjectiveTriple> a,
                                    std::span<const ObjectiveTriple> b);
  std::array<double, 3> normalize(const ObjectiveTriple& t) const;
};

std::array<double, 3> to_minimized(const ObjectiveTriple& t);

// Exact hypervolume dominated by already-normalized minimization points with
// respect to `reference`. Points not strictly better than the reference on
// every axis contribute nothing.
double hypervolume(std::span<const std::array<double, 3>> points,
                   const std::array<double, 3>& reference);

inline constexpr double kHypervolumeReference = 1.1;

// Hypervolume of a front in `frame`, reference point 1.1 on every axis.
double hypervolume(std::span<const ObjectiveTriple> front, const ObjectiveFrame& frame);

// Indices of the first front restricted to feasible members.
std::vector<std::size_t> feasible_front(std::span<const Individual> pool);

// Member of `front` closest (Euclidean, normalized over the front) to the
// ideal point. Ties go to the earliest member.
std::optional<std::size_t> knee_point(std::span<const ObjectiveTriple> front);

}  // namespace dcsf
