#pragma once

// Quadrature on the unit disk with the measure rho drho dtheta.
//
// With t = rho^2 the radial measure becomes dt / 2, so an n-point
// Gauss-Legendre rule on t in [0, 1] integrates R_n R_n' exactly whenever
// (n + n') / 2 < 2 * radial_nodes. The angular direction uses the
// equispaced trapezoid rule, exact for trigonometric polynomials of degree
// below angular_nodes.

#include <cstdint>
#include <span>
#include <vector>

#include "zernike/coefficients.hpp"
#include "zernike/evaluation.hpp"

namespace zernike {

struct QuadratureConfig {
  int radial_nodes = 64;
  int angular_nodes = 256;

  /// Requires radial_nodes >= 2 and angular_nodes >= 4.
  void validate() const;
};

/// Gauss-Legendre nodes (ascending) and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Roots of P_n by Newton iteration, converged to 1e-15.
GaussLegendreRule gauss_legendre(int n);

/// Tensor grid of radial x angular nodes with the combined weights.
class DiskQuadrature {
public:
  explicit DiskQuadrature(const QuadratureConfig& cfg);

  std::size_t size() const noexcept { return weights_.size(); }
  const QuadratureConfig& config() const noexcept { return cfg_; }
  std::span<const double> rho() const noexcept { return rho_; }
  std::span<const double> theta() const noexcept { return theta_; }

  /// Z_j at every grid point, radial-major (index = i * angular_nodes + l).
  std::vector<double> sample(const ZernikeSpec& spec,
                             Normalized normalized = Normalized::yes) const;

  /// sum_p w_p a_p b_p over the grid.
  double integrate(std::span<const double> a, std::span<const double> b) const;

private:
  QuadratureConfig cfg_;
  std::vector<double> rho_;      // radial_nodes
  std::vector<double> theta_;    // angular_nodes
  std::vector<double> weights_;  // radial_nodes * angular_nodes
};

/// Approximates the disk integral of Z_j1 Z_j2 (normalized polynomials).
double inner_product(NollIndex j1, NollIndex j2, const QuadratureConfig& cfg = {});

struct OrthonormalityReport {
  double max_deviation = 0.0;  // max |<Z_j, Z_j'> - pi delta_jj'|
  std::int64_t worst_j1 = 1;
  std::int64_t worst_j2 = 1;
  std::size_t pairs = 0;
};

/// Sweeps 1 <= j <= j' <= j_max.
OrthonormalityReport check_orthonormality(std::int64_t j_max, const QuadratureConfig& cfg = {});

}  // namespace zernike
