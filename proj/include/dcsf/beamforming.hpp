#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "dcsf/geometry.hpp"
#include "dcsf/params.hpp"
#include "dcsf/scenario.hpp"

namespace dcsf {

// Elevation theta in [0, pi] from +z, azimuth phi in [-pi, pi] from +x.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

Direction direction_between(const Position3& from, const Position3& to);

// A virtual antenna array: UAV positions acting as isotropic elements with
// real excitation weights.
struct ArraySpec {
  std::vector<Position3> positions;
  std::vector<double> weights;
  double wavelength = 0.125;

  std::size_t size() const { return positions.size(); }
  void validate() const;
};

struct QuadratureSpec {
  std::size_t n_theta = 512;
  std::size_t n_phi = 1024;
};

// sum_v w_v exp(j p (x sin(theta) cos(phi) + y sin(theta) sin(phi) + z cos(theta))).
std::complex<double> array_factor(const ArraySpec& spec, Direction dir);

// (1/4pi) * integral of |F|^2 over the sphere, evaluated exactly as
// sum_ij w_i w_j sinc(p d_ij).
double denominator_closed_form(const ArraySpec& spec);

// Same quantity by Gauss-Legendre in cos(theta) x uniform rule in phi.
double denominator_quadrature(const ArraySpec& spec, const QuadratureSpec& quad);

// Directive gain toward `dir`: eta |F(dir)|^2 / denominator_closed_form.
// Throws std::domain_error when every weight is zero.
double array_gain(const ArraySpec& spec, Direction dir, double efficiency);

// Precomputes the normalization so that the gain can be sampled repeatedly.
class GainPattern {
 public:
  GainPattern(ArraySpec spec, double efficiency);
  double operator()(Direction dir) const;
  double denominator() const { return denominator_; }

 private:
  ArraySpec spec_;
  double efficiency_;
  double denominator_;
};

// (1/4pi) * integral of f(Direction) dOmega on the quadrature grid.
template <class F>
double sphere_average(F&& f, const QuadratureSpec& quad);

struct QuadratureRule {
  std::vector<double> nodes;    // in [-1, 1]
  std::vector<double> weights;  // sum to 2
};
QuadratureRule gauss_legendre(std::size_t n);

Position3 centroid(std::span<const Position3> points);

// Cluster-to-BS SNR. A single-UAV cluster transmits with its own power and
// no array gain; larger clusters use P_c = sum w^2 P_v and the array gain
// toward the BS. Path loss is taken from the cluster centroid.
double cluster_snr(const Scenario& scenario, std::span<const std::size_t> members,
                   std::span<const Position3> positions, std::span<const double> weights,
                   const SystemParams& params);

template <class F>
double sphere_average(F&& f, const QuadratureSpec& quad) {
  const QuadratureRule rule = gauss_legendre(quad.n_theta);
  const double dphi = 2.0 * kPi / static_cast<double>(quad.n_phi);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = std::acos(rule.nodes[i]);
    double ring = 0.0;
    for (std::size_t j = 0; j < quad.n_phi; ++j) {
      const double phi = -kPi + (static_cast<double>(j) + 0.5) * dphi;
      ring += f(Direction{theta, phi});
    }
    total += rule.weights[i] * ring * dphi;
  }
  return total / (4.0 * kPi);
}

}  // namespace dcsf
