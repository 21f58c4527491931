#pragma once

// Conversions between the Noll single index j, the Born-Wolf pair (n, m),
// the ANSI single index and the position r of m inside its radial order.
//
// The Noll ordering used throughout is
//     j = n(n+1)/2 + |m| + u(m),   u(m) = 1 for m >= 0, 0 otherwise,
// and its inverse is computed entirely in integer arithmetic.

#include <cstdint>

namespace zernike {

/// Born-Wolf double index. Only constructible through validate_nm, so every
/// instance satisfies n >= 0, |m| <= n and n - m even.
class BwIndex {
public:
  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  std::int64_t m_abs() const noexcept { return m_ < 0 ? -m_ : m_; }

  friend bool operator==(const BwIndex&, const BwIndex&) = default;

private:
  BwIndex(std::int64_t n, std::int64_t m) noexcept : n_(n), m_(m) {}
  friend BwIndex validate_nm(std::int64_t n, std::int64_t m);

  std::int64_t n_;
  std::int64_t m_;
};

/// Noll single index, j >= 1.
class NollIndex {
public:
  explicit NollIndex(std::int64_t j);
  std::int64_t value() const noexcept { return j_; }
  friend auto operator<=>(const NollIndex&, const NollIndex&) = default;

private:
  std::int64_t j_;
};

/// ANSI single index, j_ansi >= 0.
class AnsiIndex {
public:
  explicit AnsiIndex(std::int64_t j);
  std::int64_t value() const noexcept { return j_; }
  friend bool operator==(const AnsiIndex&, const AnsiIndex&) = default;

private:
  std::int64_t j_;
};

/// 1-based position of m within the admissible sequence of order n;
/// always 1 <= r <= n + 1.
struct SeqPosition {
  std::int64_t r;
  friend bool operator==(const SeqPosition&, const SeqPosition&) = default;
};

/// Largest Noll index accepted by j_to_nm (keeps 8j + 1 far from overflow).
inline constexpr std::int64_t max_noll_index = std::int64_t{1} << 58;

/// Largest radial degree accepted by validate_nm.
inline constexpr std::int64_t max_radial_degree = std::int64_t{1} << 28;

/// Throws DomainError (negative_degree, azimuth_bound or parity).
BwIndex validate_nm(std::int64_t n, std::int64_t m);

/// Discrete unit step: 1 for m >= 0, else 0.
constexpr std::int64_t unit_step(std::int64_t m) noexcept { return m >= 0 ? 1 : 0; }

/// Triangular number n(n+1)/2.
constexpr std::int64_t triangular(std::int64_t n) noexcept { return n * (n + 1) / 2; }

/// floor(sqrt(x)) for x >= 0, exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t x) noexcept;

NollIndex nm_to_j(BwIndex idx) noexcept;
BwIndex j_to_nm(NollIndex j);

/// Number of radial terms minus one: (n - |m|) / 2.
std::int64_t nm_to_k(BwIndex idx) noexcept;

AnsiIndex nm_to_ansi(BwIndex idx) noexcept;
BwIndex ansi_to_nm(AnsiIndex j);

/// r = j - n(n+1)/2.
SeqPosition seq_position(NollIndex j);

/// Radial degree n of the Noll index j: the smallest n with
/// (n+1)(n+2)/2 >= j.
std::int64_t radial_degree(NollIndex j);

}  // namespace zernike
