#include "dcsf/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcsf/channel.hpp"

namespace dcsf {

Direction direction_between(const Position3& from, const Position3& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double dz = to.z - from.z;
  const double r = std::hypot(dx, dy, dz);
  if (!(r > 0.0)) {
    throw std::domain_error("direction between coincident points");
  }
  return {std::acos(std::clamp(dz / r, -1.0, 1.0)), std::atan2(dy, dx)};
}

void ArraySpec::validate() const {
  if (positions.empty() || positions.size() != weights.size()) {
    throw std::invalid_argument("array needs equal, non-zero numbers of positions and weights");
  }
  if (!(wavelength > 0.0)) {
    throw std::invalid_argument("array wavelength must be positive");
  }
}

std::complex<double> array_factor(const ArraySpec& spec, Direction dir) {
  const double p = 2.0 * kPi / spec.wavelength;
  const double st = std::sin(dir.theta);
  const double ux = st * std::cos(dir.phi);
  const double uy = st * std::sin(dir.phi);
  const double uz = std::cos(dir.theta);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t v = 0; v < spec.positions.size(); ++v) {
    const Position3& q = spec.positions[v];
    const double phase = p * (q.x * ux + q.y * uy + q.z * uz);
    sum += spec.weights[v] * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return sum;
}

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace

double denominator_closed_form(const ArraySpec& spec) {
  spec.validate();
  const double p = 2.0 * kPi / spec.wavelength;
  const std::size_t n = spec.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += spec.weights[i] * spec.weights[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(spec.positions[i], spec.positions[j]);
      sum += 2.0 * spec.weights[i] * spec.weights[j] * sinc(p * d);
    }
  }
  return sum;
}

double denominator_quadrature(const ArraySpec& spec, const QuadratureSpec& quad) {
  spec.validate();
  return sphere_average([&](Direction d) { return std::norm(array_factor(spec, d)); }, quad);
}

double array_gain(const ArraySpec& spec, Direction dir, double efficiency) {
  const double denom = denominator_closed_form(spec);
  if (!(denom > 0.0)) {
    throw std::domain_error("array gain is undefined for all-zero weights");
  }
  return efficiency * std::norm(array_factor(spec, dir)) / denom;
}

GainPattern::GainPattern(ArraySpec spec, double efficiency)
    : spec_(std::move(spec)), efficiency_(efficiency), denominator_(denominator_closed_form(spec_)) {
  if (!(denominator_ > 0.0)) {
    throw std::domain_error("array gain is undefined for all-zero weights");
  }
}

double GainPattern::operator()(Direction dir) const {
  return efficiency_ * std::norm(array_factor(spec_, dir)) / denominator_;
}

QuadratureRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

Position3 centroid(std::span<const Position3> points) {
  if (points.empty()) throw std::invalid_argument("centroid of an empty set");
  Position3 c;
  for (const auto& p : points) {
    c.x += p.x;
    c.y += p.y;
    c.z += p.z;
  }
  const double n = static_cast<double>(points.size());
  return {c.x / n, c.y / n, c.z / n};
}

double cluster_snr(const Scenario& scenario, std::span<const std::size_t> members,
                   std::span<const Position3> positions, std::span<const double> weights,
                   const SystemParams& params) {
  if (members.empty()) throw std::invalid_argument("cluster has no members");
  const double noise = params.noise_power_w();
  if (members.size() == 1) {
    const std::size_t v = members[0];
    const auto geom = LinkGeometry::between(positions[v], scenario.bs_pos);
    return scenario.uavs[v].tx_power * db_to_linear_gain(average_path_loss_db(geom, params)) /
           noise;
  }
  ArraySpec spec;
  spec.wavelength = params.wavelength_m;
  double power = 0.0;
  for (std::size_t v : members) {
    spec.positions.push_back(positions[v]);
    spec.weights.push_back(weights[v]);
    power += weights[v] * weights[v] * scenario.uavs[v].tx_power;
  }
  if (!(power > 0.0)) return 0.0;
  const Position3 center = centroid(spec.positions);
  const double gain =
      array_gain(spec, direction_between(center, scenario.bs_pos), params.array_efficiency);
  const auto geom = LinkGeometry::between(center, scenario.bs_pos);
  return power * gain * db_to_linear_gain(average_path_loss_db(geom, params)) / noise;
}

}  // namespace dcsf
