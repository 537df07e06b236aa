#include "dcsf/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dcsf/problem.hpp"

namespace dcsf {

Fronts nondominated_sort(std::size_t n,
                         const std::function<bool(std::size_t, std::size_t)>& dominates_fn) {
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> counter(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates_fn(i, j)) {
        dominated[i].push_back(j);
        ++counter[j];
      } else if (dominates_fn(j, i)) {
        dominated[j].push_back(i);
        ++counter[i];
      }
    }
  }
  Fronts fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (counter[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated[i]) {
        if (--counter[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

Fronts nondominated_sort(std::span<const Individual> pool) {
  return nondominated_sort(pool.size(), [&](std::size_t a, std::size_t b) {
    return dominates(pool[a], pool[b]);
  });
}

namespace {

double component(const ObjectiveTriple& t, int m) {
  return m == 0 ? t.f1 : (m == 1 ? t.f2 : t.f3);
}

}  // namespace

std::vector<double> crowding_distance(std::span<const ObjectiveTriple> front) {
  const std::size_t n = front.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), kInf);
    return dist;
  }
  std::vector<double> values(n);
  for (int m = 0; m < 3; ++m) {
    for (std::size_t i = 0; i < n; ++i) values[i] = component(front[i], m);
    std::vector<double> distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const double range = distinct.back() - distinct.front();
    if (!(range > 0.0)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), values[i]) - distinct.begin());
      if (pos == 0 || pos + 1 == distinct.size()) {
        dist[i] = kInf;
      } else {
        dist[i] += (distinct[pos + 1] - distinct[pos - 1]) / range;
      }
    }
  }
  return dist;
}

RankInfo rank_pool(std::span<const Individual> pool) {
  RankInfo info;
  info.rank.assign(pool.size(), 0);
  info.crowding.assign(pool.size(), 0.0);
  const Fronts fronts = nondominated_sort(pool);
  std::vector<ObjectiveTriple> pts;
  for (std::size_t r = 0; r < fronts.size(); ++r) {
    pts.clear();
    for (std::size_t i : fronts[r]) pts.push_back(pool[i].objectives);
    const auto cd = crowding_distance(pts);
    for (std::size_t k = 0; k < fronts[r].size(); ++k) {
      info.rank[fronts[r][k]] = r;
      info.crowding[fronts[r][k]] = cd[k];
    }
  }
  return info;
}

std::vector<std::size_t> select_best(std::span<const Individual> pool, std::size_t keep) {
  const RankInfo info = rank_pool(pool);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (info.rank[a] != info.rank[b]) return info.rank[a] < info.rank[b];
    if (info.crowding[a] != info.crowding[b]) return info.crowding[a] > info.crowding[b];
    return a < b;
  });
  if (order.size() > keep) order.resize(keep);
  return order;
}

std::array<double, 3> to_minimized(const ObjectiveTriple& t) { return {-t.f1, -t.f2, t.f3}; }

namespace {

void extend(ObjectiveFrame& frame, std::span<const ObjectiveTriple> points, bool& first) {
  for (const auto& t : points) {
    const auto m = to_minimized(t);
    for (int k = 0; k < 3; ++k) {
      if (first) {
        frame.ideal[k] = m[k];
        frame.nadir[k] = m[k];
      } else {
        frame.ideal[k] = std::min(frame.ideal[k], m[k]);
        frame.nadir[k] = std::max(frame.nadir[k], m[k]);
      }
    }
    first = false;
  }
}

}  // namespace

ObjectiveFrame ObjectiveFrame::from_points(std::span<const ObjectiveTriple> points) {
  ObjectiveFrame frame;
  bool first = true;
  extend(frame, points, first);
  return frame;
}

ObjectiveFrame ObjectiveFrame::from_points(std::span<const ObjectiveTriple> a,
                                           std::span<const ObjectiveTriple> b) {
  ObjectiveFrame frame;
  bool first = true;
  extend(frame, a, first);
  extend(frame, b, first);
  return frame;
}

std::array<double, 3> ObjectiveFrame::normalize(const ObjectiveTriple& t) const {
  const auto m = to_minimized(t);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const double range = nadir[k] - ideal[k];
    out[k] = range > 0.0 ? (m[k] - ideal[k]) / range : 0.0;
  }
  return out;
}

double hypervolume(std::span<const std::array<double, 3>> points,
                   const std::array<double, 3>& reference) {
  std::vector<std::array<double, 3>> pts;
  for (const auto& p : points) {
    if (p[0] < reference[0] && p[1] < reference[1] && p[2] < reference[2]) pts.push_back(p);
  }
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a[2] < b[2]; });

  std::vector<std::array<double, 2>> slice;
  double volume = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    slice.push_back({pts[i][0], pts[i][1]});
    const double z_next = i + 1 < pts.size() ? pts[i + 1][2] : reference[2];
    const double depth = z_next - pts[i][2];
    if (!(depth > 0.0)) continue;
    std::vector<std::array<double, 2>> sorted = slice;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    double area = 0.0;
    double y_cut = reference[1];
    for (const auto& p : sorted) {
      if (p[1] < y_cut) {
        area += (reference[0] - p[0]) * (y_cut - p[1]);
        y_cut = p[1];
      }
    }
    volume += area * depth;
  }
  return volume;
}

double hypervolume(std::span<const ObjectiveTriple> front, const ObjectiveFrame& frame) {
  std::vector<std::array<double, 3>> pts;
  pts.reserve(front.size());
  for (const auto& t : front) pts.push_back(frame.normalize(t));
  const std::array<double, 3> ref{kHypervolumeReference, kHypervolumeReference,
                                  kHypervolumeReference};
  return hypervolume(pts, ref);
}

std::vector<std::size_t> feasible_front(std::span<const Individual> pool) {
  if (pool.empty()) return {};
  const Fronts fronts = nondominated_sort(pool);
  std::vector<std::size_t> out;
  for (std::size_t i : fronts.front()) {
    if (pool[i].feasible()) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> knee_point(std::span<const ObjectiveTriple> front) {
  if (front.empty()) return std::nullopt;
  const ObjectiveFrame frame = ObjectiveFrame::from_points(front);
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < front.size(); ++i) {
    const auto p = frame.normalize(front[i]);
    const double d = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

}  // namespace dcsf
