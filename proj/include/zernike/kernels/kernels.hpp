#pragma once

// Data-parallel inner loops used by evaluation and quadrature.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant compiled in its own translation unit. The variant is picked at
// runtime from CPUID; callers may also request one explicitly, which is how
// the equivalence tests compare them.

#include <span>
#include <string_view>

namespace zernike::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Fastest available variant, detected once.
Isa best_isa() noexcept;

/// out[i] = rho[i]^m_abs * sum_s coeffs[s] * t^(k-s), t = rho[i]^2,
/// evaluated by Horner's scheme in t. coeffs runs from the highest power
/// down. rho and out must have equal length.
void radial_horner(std::span<const double> coeffs, int m_abs, std::span<const double> rho,
                   std::span<double> out, Isa isa);
void radial_horner(std::span<const double> coeffs, int m_abs, std::span<const double> rho,
                   std::span<double> out);

/// sum_i w[i] * a[i] * b[i]; all three spans must have equal length.
double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b, Isa isa);
double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);

namespace detail {

void radial_horner_scalar(std::span<const double> coeffs, int m_abs,
                          std::span<const double> rho, std::span<double> out) noexcept;
double weighted_dot_scalar(std::span<const double> w, std::span<const double> a,
                           std::span<const double> b) noexcept;

#if defined(ZERNIKE_HAVE_AVX2_KERNELS)
void radial_horner_avx2(std::span<const double> coeffs, int m_abs,
                        std::span<const double> rho, std::span<double> out) noexcept;
double weighted_dot_avx2(std::span<const double> w, std::span<const double> a,
                         std::span<const double> b) noexcept;
#endif

}  // namespace detail

}  // namespace zernike::kernels
