#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "zernike/coefficients.hpp"
#include "zernike/errors.hpp"
#include "zernike/evaluation.hpp"
#include "zernike/kernels/kernels.hpp"

using namespace zernike;
using kernels::Isa;

TEST_CASE("scalar kernels are always available") {
  CHECK(kernels::isa_available(Isa::scalar));
  CHECK(kernels::isa_available(kernels::best_isa()));
  MESSAGE("active kernel variant: " << kernels::to_string(kernels::best_isa()));
}

TEST_CASE("radial_horner variants agree") {
  if (!kernels::isa_available(Isa::avx2)) {
    MESSAGE("AVX2 unavailable; equivalence check skipped");
    const std::vector<double> one{1.0};
    std::vector<double> out(1);
    CHECK_THROWS_AS(kernels::radial_horner(one, 0, one, out, Isa::avx2), DomainError);
    return;
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pick(-1.0, 1.0);
  for (std::int64_t n = 0; n <= 40; ++n) {
    for (std::int64_t m = n % 2; m <= n; m += 2) {
      const RadialPoly poly = radial_coefficients(validate_nm(n, m));
      const std::vector<double> coeffs = coefficients_as_double(poly);
      double scale = 0.0;
      for (double c : coeffs) scale += std::abs(c);
      // Odd lengths exercise the scalar tail of the vector loop.
      std::vector<double> rho(37);
      for (double& r : rho) r = pick(rng);
      std::vector<double> a(rho.size());
      std::vector<double> b(rho.size());
      kernels::radial_horner(coeffs, static_cast<int>(m), rho, a, Isa::scalar);
      kernels::radial_horner(coeffs, static_cast<int>(m), rho, b, Isa::avx2);
      for (std::size_t i = 0; i < rho.size(); ++i)
        REQUIRE(std::abs(a[i] - b[i]) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("weighted_dot variants agree") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> pick(-1.0, 1.0);
  for (std::size_t len : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 1000u, 16384u}) {
    std::vector<double> w(len);
    std::vector<double> a(len);
    std::vector<double> b(len);
    double bound = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      w[i] = std::abs(pick(rng));
      a[i] = pick(rng);
      b[i] = pick(rng);
      bound += std::abs(w[i] * a[i] * b[i]);
    }
    const double ref = kernels::weighted_dot(w, a, b, Isa::scalar);
    for (Isa isa : {Isa::scalar, Isa::avx2}) {
      if (!kernels::isa_available(isa)) continue;
      CHECK(std::abs(kernels::weighted_dot(w, a, b, isa) - ref) <= 1e-14 * std::max(1.0, bound));
    }
  }
}

TEST_CASE("kernels reject mismatched spans") {
  std::vector<double> three(3);
  std::vector<double> four(4);
  CHECK_THROWS_AS(kernels::radial_horner(three, 0, three, four, Isa::scalar), DomainError);
  CHECK_THROWS_AS(kernels::weighted_dot(three, three, four, Isa::scalar), DomainError);
}
