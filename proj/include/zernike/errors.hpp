#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zernike {

/// Machine-readable reason attached to every DomainError.
enum class DomainErrorKind {
  negative_degree,     // n < 0
  azimuth_bound,       // |m| > n
  parity,              // n - m odd
  index_below_one,     // Noll j < 1
  index_negative,      // ANSI j < 0
  index_too_large,     // index would overflow integer arithmetic
  binomial_range,      // b > a or negative arguments
  rho_out_of_range,    // rho outside [0, 1]
  empty_range,         // j_min > j_max
  quadrature_config,   // too few quadrature nodes
  bad_argument,        // anything else the caller got wrong
};

/// Short stable tag for a kind ("parity", "bound", ...).
std::string_view to_string(DomainErrorKind kind) noexcept;

class DomainError : public std::domain_error {
public:
  DomainError(DomainErrorKind kind, const std::string& what)
      : std::domain_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  DomainErrorKind kind() const noexcept { return kind_; }

private:
  DomainErrorKind kind_;
};

/// Raised when a TextSink cannot accept more output.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace zernike
