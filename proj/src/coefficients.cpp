#include "zernike/coefficients.hpp"

#include <string>

#include "zernike/errors.hpp"

namespace zernike {

double binom_real(double alpha, std::int64_t i) {
  if (i < 0)
    throw DomainError(DomainErrorKind::binomial_range,
                      "binomial lower argument must be >= 0, got " + std::to_string(i));
  double prod = 1.0;
  for (std::int64_t t = 0; t < i; ++t)
    prod = prod * (alpha - static_cast<double>(t)) / static_cast<double>(i - t);
  return prod;
}

ExactInt binom_exact(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a)
    throw DomainError(DomainErrorKind::binomial_range,
                      "binomial requires 0 <= b <= a, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
  if (b > a - b) b = a - b;
  ExactInt r = 1;
  // After step t the accumulator holds C(a - b + t, t), so each division is exact.
  for (std::int64_t t = 1; t <= b; ++t) {
    r *= a - b + t;
    r /= t;
  }
  return r;
}

RadialPoly radial_coefficients(BwIndex idx) {
  RadialPoly poly;
  poly.n = idx.n();
  poly.m_abs = idx.m_abs();
  poly.k = nm_to_k(idx);
  poly.coeffs.reserve(static_cast<std::size_t>(poly.k) + 1);
  poly.powers.reserve(static_cast<std::size_t>(poly.k) + 1);
  int sign = 1;
  for (std::int64_t s = 0; s <= poly.k; ++s) {
    ExactInt c = binom_exact(poly.k, s) * binom_exact(poly.n - s, poly.k);
    if (sign < 0) c = -c;
    poly.coeffs.push_back(std::move(c));
    poly.powers.push_back(poly.n - 2 * s);
    sign = -sign;
  }
  return poly;
}

Normalization normalization_radicand(BwIndex idx) noexcept {
  return {idx.m() == 0 ? idx.n() + 1 : 2 * (idx.n() + 1)};
}

std::string_view to_string(AngularKind kind) noexcept {
  switch (kind) {
    case AngularKind::unity: return "unity";
    case AngularKind::cosine: return "cosine";
    case AngularKind::sine: return "sine";
  }
  return "unity";
}

AngularFactor angular_factor(BwIndex idx) noexcept {
  // The m = 0 branch is the constant regardless of the parity of j.
  if (idx.m() == 0) return {AngularKind::unity, 0};
  const bool j_even = nm_to_j(idx).value() % 2 == 0;
  return {j_even ? AngularKind::cosine : AngularKind::sine, idx.m_abs()};
}

ZernikeSpec zernike_spec(NollIndex j) {
  const BwIndex idx = j_to_nm(j);
  return ZernikeSpec{j, idx, normalization_radicand(idx), radial_coefficients(idx),
                     angular_factor(idx)};
}

}  // namespace zernike
