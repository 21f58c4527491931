#include "zernike/kernels/kernels.hpp"

namespace zernike::kernels::detail {

void radial_horner_scalar(std::span<const double> coeffs, int m_abs,
                          std::span<const double> rho, std::span<double> out) noexcept {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double r = rho[i];
    const double t = r * r;
    double acc = 0.0;
    for (const double c : coeffs) acc = acc * t + c;
    double tail = 1.0;
    for (int e = 0; e < m_abs; ++e) tail *= r;
    out[i] = acc * tail;
  }
}

double weighted_dot_scalar(std::span<const double> w, std::span<const double> a,
                           std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

}  // namespace zernike::kernels::detail
