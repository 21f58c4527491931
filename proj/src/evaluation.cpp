#include "zernike/evaluation.hpp"

#include <cmath>
#include <string>

#include "zernike/errors.hpp"
#include "zernike/kernels/kernels.hpp"

namespace zernike {

EvalPoint::EvalPoint(double rho, double theta) : rho_(rho), theta_(theta) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw DomainError(DomainErrorKind::rho_out_of_range,
                      "rho must lie in [0, 1], got " + std::to_string(rho));
  if (!std::isfinite(theta))
    throw DomainError(DomainErrorKind::bad_argument, "theta must be finite");
}

std::vector<double> coefficients_as_double(const RadialPoly& poly) {
  std::vector<double> out;
  out.reserve(poly.coeffs.size());
  for (const ExactInt& c : poly.coeffs) out.push_back(c.convert_to<double>());
  return out;
}

double eval_radial(const RadialPoly& poly, double rho, RangeCheck check) {
  if (check == RangeCheck::strict && !(rho >= 0.0 && rho <= 1.0))
    throw DomainError(DomainErrorKind::rho_out_of_range,
                      "rho must lie in [0, 1], got " + std::to_string(rho));
  const std::vector<double> coeffs = coefficients_as_double(poly);
  double out = 0.0;
  kernels::radial_horner(coeffs, static_cast<int>(poly.m_abs), std::span(&rho, 1),
                         std::span(&out, 1), kernels::Isa::scalar);
  return out;
}

void eval_radial_batch(const RadialPoly& poly, std::span<const double> rho, std::span<double> out) {
  const std::vector<double> coeffs = coefficients_as_double(poly);
  kernels::radial_horner(coeffs, static_cast<int>(poly.m_abs), rho, out);
}

double eval_angular(const AngularFactor& angular, double theta) noexcept {
  const double arg = static_cast<double>(angular.frequency) * theta;
  switch (angular.kind) {
    case AngularKind::unity: return 1.0;
    case AngularKind::cosine: return std::cos(arg);
    case AngularKind::sine: return std::sin(arg);
  }
  return 1.0;
}

double eval_zernike(const ZernikeSpec& spec, EvalPoint pt, Normalized normalized) {
  const double scale =
      normalized == Normalized::yes ? std::sqrt(static_cast<double>(spec.norm.radicand)) : 1.0;
  return scale * eval_radial(spec.radial, pt.rho()) * eval_angular(spec.angular, pt.theta());
}

}  // namespace zernike
