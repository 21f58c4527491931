#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zernike {

/// Arbitrary-precision signed integer used for every exact coefficient.
using ExactInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

}  // namespace zernike
