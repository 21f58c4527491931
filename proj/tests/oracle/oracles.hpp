#pragma once

// Independent reference computations used only by the test suites.

#include <cstdint>

#include "zernike/coefficients.hpp"

namespace zernike::oracle {

/// c_s = (-1)^s (n-s)! / (s! ((n+|m|)/2 - s)! ((n-|m|)/2 - s)!) with
/// arbitrary-precision factorials.
RadialPoly radial_coefficients_oracle(BwIndex idx);

/// C(a, b) read off an arbitrary-precision Pascal triangle.
ExactInt pascal_binomial(std::int64_t a, std::int64_t b);

struct LegacyNm {
  std::int64_t n;
  std::int64_t m;
};

/// The older closed forms from the optical testing literature
///   n(j) = floor(sqrt(2j - 1) + 1/2) - 1
///   m(j) = 2 floor((2j + 1 - n(n+1)) / 4)          for even n
///          2 floor((2(j + 1) - n(n+1)) / 4) - 1    for odd n
/// evaluated in exact integer arithmetic. Their sign convention for m
/// differs from j_to_nm; only n and |m| agree.
LegacyNm legacy_j_to_nm(std::int64_t j);

/// Same, but with 2j + 1 in the odd-n branch as well. This variant is
/// sometimes quoted; it gets |m| wrong for many odd orders (first at j = 9).
LegacyNm legacy_j_to_nm_odd_typo(std::int64_t j);

}  // namespace zernike::oracle
