#pragma once

// Structured export of a ZernikeSpec.
//
// JSON schema (one object, keys in this order, integers written exactly
// with no quoting, however many digits they need):
//
//   {"j": 12, "n": 4, "m": -2, "radicand": 10,
//    "coeffs": [4, -3], "powers": [4, 2],
//    "angular_kind": "cosine", "angular_frequency": 2}
//
// angular_kind is one of "unity", "cosine", "sine".
//
// The plain-text form carries the same fields, one "key: value" per line,
// with sequences space separated.

#include <string>

#include "zernike/coefficients.hpp"

namespace zernike {

std::string coefficient_record_json(const ZernikeSpec& spec);
std::string coefficient_record_text(const ZernikeSpec& spec);

}  // namespace zernike
