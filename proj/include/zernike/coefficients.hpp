#pragma once

// Exact coefficients of the Zernike circular polynomials
//
//     Z_n^m(rho, theta) = N_n^m R_n^|m|(rho) Theta_m(theta)
//
// with the radial part expanded as sum_s c_s rho^(n-2s), s = 0..k, and
// c_s = (-1)^s C(k, s) C(n-s, k), k = (n - |m|) / 2.

#include <cstdint>
#include <string_view>
#include <vector>

#include "zernike/exact_int.hpp"
#include "zernike/indexing.hpp"

namespace zernike {

/// Binomial coefficient for real alpha, evaluated as the running product
/// prod_{t<i} (alpha - t) / (i - t). Throws DomainError when i < 0.
double binom_real(double alpha, std::int64_t i);

/// Exact C(a, b), 0 <= b <= a, by the multiplicative recurrence with an
/// exact division at every step.
ExactInt binom_exact(std::int64_t a, std::int64_t b);

struct RadialPoly {
  std::int64_t n = 0;
  std::int64_t m_abs = 0;
  std::int64_t k = 0;
  std::vector<ExactInt> coeffs;      // c_0 .. c_k
  std::vector<std::int64_t> powers;  // n, n-2, ..., m_abs

  friend bool operator==(const RadialPoly&, const RadialPoly&) = default;
};

RadialPoly radial_coefficients(BwIndex idx);

/// The normalization factor is sqrt(radicand).
struct Normalization {
  std::int64_t radicand = 1;
  friend bool operator==(const Normalization&, const Normalization&) = default;
};

Normalization normalization_radicand(BwIndex idx) noexcept;

enum class AngularKind { unity, cosine, sine };

std::string_view to_string(AngularKind kind) noexcept;

struct AngularFactor {
  AngularKind kind = AngularKind::unity;
  std::int64_t frequency = 0;
  friend bool operator==(const AngularFactor&, const AngularFactor&) = default;
};

/// unity for m = 0, otherwise cosine for even j and sine for odd j.
AngularFactor angular_factor(BwIndex idx) noexcept;

struct ZernikeSpec {
  NollIndex j;
  BwIndex idx;
  Normalization norm;
  RadialPoly radial;
  AngularFactor angular;
};

ZernikeSpec zernike_spec(NollIndex j);

}  // namespace zernike
