#include "zernike/indexing.hpp"

#include <cmath>
#include <string>

#include "zernike/errors.hpp"

namespace zernike {

NollIndex::NollIndex(std::int64_t j) : j_(j) {
  if (j < 1)
    throw DomainError(DomainErrorKind::index_below_one,
                      "Noll index must be >= 1, got " + std::to_string(j));
}

AnsiIndex::AnsiIndex(std::int64_t j) : j_(j) {
  if (j < 0)
    throw DomainError(DomainErrorKind::index_negative,
                      "ANSI index must be >= 0, got " + std::to_string(j));
}

BwIndex validate_nm(std::int64_t n, std::int64_t m) {
  if (n < 0)
    throw DomainError(DomainErrorKind::negative_degree,
                      "n must be non-negative, got n=" + std::to_string(n));
  if (n > max_radial_degree)
    throw DomainError(DomainErrorKind::index_too_large,
                      "n=" + std::to_string(n) + " exceeds the supported range");
  if (m < -n || m > n)
    throw DomainError(DomainErrorKind::azimuth_bound,
                      "|m| must not exceed n, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
  if ((n - m) % 2 != 0)
    throw DomainError(DomainErrorKind::parity,
                      "n-m must be even, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
  return BwIndex(n, m);
}

std::uint64_t isqrt(std::uint64_t x) noexcept {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  // The double estimate is off by at most a couple of units near 2^64.
  while (r > 0 && (r > UINT64_C(0xFFFFFFFF) || r * r > x)) --r;
  while ((r + 1) <= UINT64_C(0xFFFFFFFF) && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t radial_degree(NollIndex j) {
  const std::int64_t jv = j.value();
  if (jv > max_noll_index)
    throw DomainError(DomainErrorKind::index_too_large,
                      "Noll index " + std::to_string(jv) + " exceeds the supported range");
  // ceil((-3 + sqrt(8j+1)) / 2) without floating point: start from the
  // integer root and step until (n+1)(n+2)/2 >= j > n(n+1)/2.
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * jv + 1)));
  std::int64_t n = (s - 3) / 2;
  if (n < 0) n = 0;
  while (triangular(n + 1) < jv) ++n;
  while (n > 0 && triangular(n) >= jv) --n;
  return n;
}

NollIndex nm_to_j(BwIndex idx) noexcept {
  return NollIndex(triangular(idx.n()) + idx.m_abs() + unit_step(idx.m()));
}

SeqPosition seq_position(NollIndex j) {
  return {j.value() - triangular(radial_degree(j))};
}

BwIndex j_to_nm(NollIndex j) {
  const std::int64_t n = radial_degree(j);
  const std::int64_t r = j.value() - triangular(n);
  const bool n_even = n % 2 == 0;
  const bool r_even = r % 2 == 0;
  std::int64_t m;
  if (n_even)
    m = r_even ? -r : r - 1;
  else
    m = r_even ? r - 1 : -r;
  return validate_nm(n, m);
}

std::int64_t nm_to_k(BwIndex idx) noexcept { return (idx.n() - idx.m_abs()) / 2; }

AnsiIndex nm_to_ansi(BwIndex idx) noexcept {
  return AnsiIndex((idx.n() * (idx.n() + 2) + idx.m()) / 2);
}

BwIndex ansi_to_nm(AnsiIndex j) {
  const std::int64_t jv = j.value();
  if (jv > max_noll_index)
    throw DomainError(DomainErrorKind::index_too_large,
                      "ANSI index " + std::to_string(jv) + " exceeds the supported range");
  // Order n covers ANSI indices n(n+1)/2 .. n(n+3)/2.
  auto n = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * jv + 1)));
  n = (n - 1) / 2;
  while (triangular(n + 1) <= jv) ++n;
  while (triangular(n) > jv) --n;
  return validate_nm(n, 2 * jv - n * (n + 2));
}

}  // namespace zernike
