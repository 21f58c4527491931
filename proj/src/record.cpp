#include "zernike/record.hpp"

#include <string_view>

namespace zernike {

namespace {

template <typename T, typename Fn>
std::string join(const std::vector<T>& items, std::string_view sep, Fn&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += fmt(items[i]);
  }
  return out;
}

std::string exact(const ExactInt& v) { return to_decimal(v); }
std::string integer(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::string coefficient_record_json(const ZernikeSpec& spec) {
  std::string out = "{";
  out += "\"j\": " + integer(spec.j.value());
  out += ", \"n\": " + integer(spec.idx.n());
  out += ", \"m\": " + integer(spec.idx.m());
  out += ", \"radicand\": " + integer(spec.norm.radicand);
  out += ", \"coeffs\": [" + join(spec.radial.coeffs, ", ", exact) + "]";
  out += ", \"powers\": [" + join(spec.radial.powers, ", ", integer) + "]";
  out += ", \"angular_kind\": \"" + std::string(to_string(spec.angular.kind)) + "\"";
  out += ", \"angular_frequency\": " + integer(spec.angular.frequency);
  out += "}";
  return out;
}

std::string coefficient_record_text(const ZernikeSpec& spec) {
  std::string out;
  out += "j: " + integer(spec.j.value()) + "\n";
  out += "n: " + integer(spec.idx.n()) + "\n";
  out += "m: " + integer(spec.idx.m()) + "\n";
  out += "radicand: " + integer(spec.norm.radicand) + "\n";
  out += "coeffs: " + join(spec.radial.coeffs, " ", exact) + "\n";
  out += "powers: " + join(spec.radial.powers, " ", integer) + "\n";
  out += "angular_kind: " + std::string(to_string(spec.angular.kind)) + "\n";
  out += "angular_frequency: " + integer(spec.angular.frequency) + "\n";
  return out;
}

}  // namespace zernike
