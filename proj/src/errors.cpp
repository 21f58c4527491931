#include "zernike/errors.hpp"

namespace zernike {

std::string_view to_string(DomainErrorKind kind) noexcept {
  switch (kind) {
    case DomainErrorKind::negative_degree: return "negative";
    case DomainErrorKind::azimuth_bound: return "bound";
    case DomainErrorKind::parity: return "parity";
    case DomainErrorKind::index_below_one: return "index";
    case DomainErrorKind::index_negative: return "index";
    case DomainErrorKind::index_too_large: return "overflow";
    case DomainErrorKind::binomial_range: return "binomial";
    case DomainErrorKind::rho_out_of_range: return "rho";
    case DomainErrorKind::empty_range: return "range";
    case DomainErrorKind::quadrature_config: return "quadrature";
    case DomainErrorKind::bad_argument: return "argument";
  }
  return "domain";
}

}  // namespace zernike
