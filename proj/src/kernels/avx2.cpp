// Built with -mavx2 -mfma; only reached after a runtime CPUID check.

#include <immintrin.h>

#include "zernike/kernels/kernels.hpp"

namespace zernike::kernels::detail {

void radial_horner_avx2(std::span<const double> coeffs, int m_abs,
                        std::span<const double> rho, std::span<double> out) noexcept {
  const std::size_t n = rho.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(rho.data() + i);
    const __m256d t = _mm256_mul_pd(r, r);
    __m256d acc = _mm256_setzero_pd();
    for (const double c : coeffs) acc = _mm256_fmadd_pd(acc, t, _mm256_set1_pd(c));
    __m256d tail = _mm256_set1_pd(1.0);
    for (int e = 0; e < m_abs; ++e) tail = _mm256_mul_pd(tail, r);
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(acc, tail));
  }
  if (i < n) radial_horner_scalar(coeffs, m_abs, rho.subspan(i), out.subspan(i));
}

double weighted_dot_avx2(std::span<const double> w, std::span<const double> a,
                         std::span<const double> b) noexcept {
  const std::size_t n = w.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(w.data() + i), _mm256_loadu_pd(a.data() + i));
    const __m256d p1 =
        _mm256_mul_pd(_mm256_loadu_pd(w.data() + i + 4), _mm256_loadu_pd(a.data() + i + 4));
    acc0 = _mm256_fmadd_pd(p0, _mm256_loadu_pd(b.data() + i), acc0);
    acc1 = _mm256_fmadd_pd(p1, _mm256_loadu_pd(b.data() + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(w.data() + i), _mm256_loadu_pd(a.data() + i));
    acc0 = _mm256_fmadd_pd(p, _mm256_loadu_pd(b.data() + i), acc0);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

}  // namespace zernike::kernels::detail
