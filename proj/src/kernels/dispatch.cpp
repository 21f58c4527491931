#include <string>

#include "zernike/errors.hpp"
#include "zernike/kernels/kernels.hpp"

namespace zernike::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(ZERNIKE_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DomainError(DomainErrorKind::bad_argument,
                      std::string(what) + ": span lengths differ (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
}

Isa checked(Isa isa) {
  if (!isa_available(isa))
    throw DomainError(DomainErrorKind::bad_argument,
                      "kernel variant '" + std::string(to_string(isa)) + "' is not available");
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "scalar";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
  }
  return false;
}

Isa best_isa() noexcept {
  static const Isa best = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  return best;
}

void radial_horner(std::span<const double> coeffs, int m_abs, std::span<const double> rho,
                   std::span<double> out, Isa isa) {
  require_same_length(rho.size(), out.size(), "radial_horner");
  switch (checked(isa)) {
    case Isa::scalar:
      detail::radial_horner_scalar(coeffs, m_abs, rho, out);
      return;
    case Isa::avx2:
#if defined(ZERNIKE_HAVE_AVX2_KERNELS)
      detail::radial_horner_avx2(coeffs, m_abs, rho, out);
#endif
      return;
  }
}

void radial_horner(std::span<const double> coeffs, int m_abs, std::span<const double> rho,
                   std::span<double> out) {
  radial_horner(coeffs, m_abs, rho, out, best_isa());
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b, Isa isa) {
  require_same_length(w.size(), a.size(), "weighted_dot");
  require_same_length(w.size(), b.size(), "weighted_dot");
  switch (checked(isa)) {
    case Isa::scalar:
      return detail::weighted_dot_scalar(w, a, b);
    case Isa::avx2:
#if defined(ZERNIKE_HAVE_AVX2_KERNELS)
      return detail::weighted_dot_avx2(w, a, b);
#else
      break;
#endif
  }
  return detail::weighted_dot_scalar(w, a, b);
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
  return weighted_dot(w, a, b, best_isa());
}

}  // namespace zernike::kernels
