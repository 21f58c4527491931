#include "zernike/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "zernike/errors.hpp"
#include "zernike/kernels/kernels.hpp"

namespace zernike {

void QuadratureConfig::validate() const {
  if (radial_nodes < 2)
    throw DomainError(DomainErrorKind::quadrature_config,
                      "radial_nodes must be >= 2, got " + std::to_string(radial_nodes));
  if (angular_nodes < 4)
    throw DomainError(DomainErrorKind::quadrature_config,
                      "angular_nodes must be >= 4, got " + std::to_string(angular_nodes));
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1)
    throw DomainError(DomainErrorKind::quadrature_config,
                      "Gauss-Legendre order must be >= 1, got " + std::to_string(n));
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // P_n(x) and P_n'(x) by the three-term recurrence.
  const auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int l = 2; l <= n; ++l) {
      const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

DiskQuadrature::DiskQuadrature(const QuadratureConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const GaussLegendreRule gl = gauss_legendre(cfg_.radial_nodes);
  const auto nr = static_cast<std::size_t>(cfg_.radial_nodes);
  const auto na = static_cast<std::size_t>(cfg_.angular_nodes);

  std::vector<double> radial_weight(nr);
  rho_.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    const double t = 0.5 * (gl.nodes[i] + 1.0);
    rho_[i] = std::sqrt(t);
    // dt on [0,1] is half of dx on [-1,1]; rho drho is another half of dt.
    radial_weight[i] = 0.25 * gl.weights[i];
  }

  const double step = 2.0 * std::numbers::pi / static_cast<double>(na);
  theta_.resize(na);
  for (std::size_t l = 0; l < na; ++l) theta_[l] = step * static_cast<double>(l);

  weights_.resize(nr * na);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t l = 0; l < na; ++l) weights_[i * na + l] = radial_weight[i] * step;
}

std::vector<double> DiskQuadrature::sample(const ZernikeSpec& spec, Normalized normalized) const {
  const std::size_t nr = rho_.size();
  const std::size_t na = theta_.size();
  std::vector<double> radial(nr);
  eval_radial_batch(spec.radial, rho_, radial);
  const double scale =
      normalized == Normalized::yes ? std::sqrt(static_cast<double>(spec.norm.radicand)) : 1.0;
  std::vector<double> angular(na);
  for (std::size_t l = 0; l < na; ++l) angular[l] = scale * eval_angular(spec.angular, theta_[l]);

  std::vector<double> grid(nr * na);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t l = 0; l < na; ++l) grid[i * na + l] = radial[i] * angular[l];
  return grid;
}

double DiskQuadrature::integrate(std::span<const double> a, std::span<const double> b) const {
  return kernels::weighted_dot(weights_, a, b);
}

double inner_product(NollIndex j1, NollIndex j2, const QuadratureConfig& cfg) {
  const DiskQuadrature quad(cfg);
  const std::vector<double> a = quad.sample(zernike_spec(j1));
  const std::vector<double> b = quad.sample(zernike_spec(j2));
  return quad.integrate(a, b);
}

OrthonormalityReport check_orthonormality(std::int64_t j_max, const QuadratureConfig& cfg) {
  if (j_max < 1)
    throw DomainError(DomainErrorKind::index_below_one,
                      "j_max must be >= 1, got " + std::to_string(j_max));
  const DiskQuadrature quad(cfg);
  std::vector<std::vector<double>> samples;
  samples.reserve(static_cast<std::size_t>(j_max));
  for (std::int64_t j = 1; j <= j_max; ++j) samples.push_back(quad.sample(zernike_spec(NollIndex(j))));

  OrthonormalityReport report;
  report.max_deviation = -1.0;
  for (std::int64_t j1 = 1; j1 <= j_max; ++j1) {
    for (std::int64_t j2 = j1; j2 <= j_max; ++j2) {
      const double value = quad.integrate(samples[static_cast<std::size_t>(j1 - 1)],
                                          samples[static_cast<std::size_t>(j2 - 1)]);
      const double expected = j1 == j2 ? std::numbers::pi : 0.0;
      const double deviation = std::abs(value - expected);
      ++report.pairs;
      if (!(deviation <= report.max_deviation)) {
        report.max_deviation = deviation;
        report.worst_j1 = j1;
        report.worst_j2 = j2;
      }
    }
  }
  return report;
}

}  // namespace zernike
