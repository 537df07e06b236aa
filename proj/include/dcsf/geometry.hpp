#pragma once

#include <cmath>

namespace dcsf {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Cartesian point in meters. The ground plane is z = 0.
struct Position3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Position3&, const Position3&) = default;
};

inline double distance(const Position3& a, const Position3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

inline double horizontal_distance(const Position3& a, const Position3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline bool is_finite(const Position3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

struct Interval {
  double min = 0.0;
  double max = 0.0;

  double width() const { return max - min; }
  bool contains(double v) const { return v >= min && v <= max; }
  double clamp(double v) const { return v < min ? min : (v > max ? max : v); }
  // Distance by which v lies outside the interval; 0 inside.
  double excess(double v) const { return v < min ? min - v : (v > max ? v - max : 0.0); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Axis-aligned deployment region R.
struct Bounds {
  Interval x;
  Interval y;
  Interval z;

  bool well_ordered() const {
    return x.min < x.max && y.min < y.max && z.min < z.max && std::isfinite(x.min) &&
           std::isfinite(x.max) && std::isfinite(y.min) && std::isfinite(y.max) &&
           std::isfinite(z.min) && std::isfinite(z.max);
  }
  bool contains(const Position3& p) const {
    return x.contains(p.x) && y.contains(p.y) && z.contains(p.z);
  }
  bool contains_ground(const Position3& p) const { return x.contains(p.x) && y.contains(p.y); }
  Position3 clamp(const Position3& p) const { return {x.clamp(p.x), y.clamp(p.y), z.clamp(p.z)}; }

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

}  // namespace dcsf
