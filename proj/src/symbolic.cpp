#include "zernike/symbolic.hpp"

#include <string>

#include "zernike/coefficients.hpp"
#include "zernike/errors.hpp"

namespace zernike {

SyntaxProfile SyntaxProfile::latex() {
  return {"\\rho", "^", true, "", "\\theta", "\\cos", "\\sin", "\\sqrt{", "}"};
}

SyntaxProfile SyntaxProfile::plain() {
  return {"r", "^", false, "*", "theta", "cos", "sin", "sqrt(", ")"};
}

SyntaxProfile SyntaxProfile::code() {
  return {"rho", "**", false, "*", "theta", "cos", "sin", "sqrt(", ")"};
}

void SyntaxProfile::validate() const {
  if (variable_token.empty())
    throw DomainError(DomainErrorKind::bad_argument, "syntax profile has an empty variable token");
  if (power_operator.empty())
    throw DomainError(DomainErrorKind::bad_argument, "syntax profile has an empty power operator");
}

void emit_sign(TextSink& sink, const ExactInt& c, std::size_t position) {
  if (c < 0)
    sink << "-";
  else if (position != 0)
    sink << "+";
}

void emit_unsigned_term(TextSink& sink, const SyntaxProfile& profile, const ExactInt& c,
                        std::int64_t power) {
  const ExactInt magnitude = c < 0 ? ExactInt(-c) : c;
  const std::string digits = to_decimal(magnitude);
  if (power == 0) {
    sink << digits;
    return;
  }
  if (magnitude != 1) sink << digits << profile.multiply_token;
  sink << profile.variable_token;
  if (power == 1) return;
  sink << profile.power_operator;
  const std::string exponent = std::to_string(power);
  if (profile.power_braces)
    sink << "{" << exponent << "}";
  else
    sink << exponent;
}

void emit_term(TextSink& sink, std::size_t position, const SyntaxProfile& profile,
               const ExactInt& c, std::int64_t power) {
  emit_sign(sink, c, position);
  emit_unsigned_term(sink, profile, c, power);
}

void emit_polynomial(TextSink& sink, const SyntaxProfile& profile,
                     std::span<const ExactInt> coeffs, std::span<const std::int64_t> powers) {
  if (coeffs.size() != powers.size())
    throw DomainError(DomainErrorKind::bad_argument,
                      "coefficient and power sequences differ in length");
  profile.validate();
  bool any = false;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (coeffs[s] == 0) continue;
    // The first emitted term counts as position 0, so skipped leading
    // zeros never leave a dangling '+'.
    emit_term(sink, any ? s : 0, profile, coeffs[s], powers[s]);
    sink << " ";
    any = true;
  }
  if (!any) sink << "0";
}

void emit_radial(TextSink& sink, BwIndex idx, const SyntaxProfile& profile) {
  const RadialPoly poly = radial_coefficients(idx);
  emit_polynomial(sink, profile, poly.coeffs, poly.powers);
}

void emit_angular(TextSink& sink, BwIndex idx, const SyntaxProfile& profile) {
  const AngularFactor angular = angular_factor(idx);
  if (angular.kind == AngularKind::unity) return;
  sink << (angular.kind == AngularKind::cosine ? profile.cos_token : profile.sin_token) << "(";
  if (angular.frequency != 1) sink << std::to_string(angular.frequency) << profile.multiply_token;
  sink << profile.angle_token << ")";
}

void emit_normalization(TextSink& sink, BwIndex idx, const SyntaxProfile& profile) {
  sink << profile.sqrt_open << std::to_string(normalization_radicand(idx).radicand)
       << profile.sqrt_close;
}

void emit_unnormalized_zernike(TextSink& sink, BwIndex idx, const SyntaxProfile& profile) {
  const std::int64_t size = 1 + nm_to_k(idx);
  if (idx.m() == 0 || size == 1) {
    emit_radial(sink, idx, profile);
  } else {
    sink << "(";
    emit_radial(sink, idx, profile);
    sink << ")";
  }
  if (idx.m() != 0) {
    sink << profile.multiply_token;
    emit_angular(sink, idx, profile);
  }
}

void emit_zernike(TextSink& sink, BwIndex idx, const SyntaxProfile& profile) {
  if (normalization_radicand(idx).radicand == 1) {
    emit_unnormalized_zernike(sink, idx, profile);
    return;
  }
  emit_normalization(sink, idx, profile);
  sink << profile.multiply_token;
  // A bare multi-term sum needs brackets to bind to the factor.
  const bool wrap = idx.m() == 0 && nm_to_k(idx) > 0;
  if (wrap) sink << "(";
  emit_unnormalized_zernike(sink, idx, profile);
  if (wrap) sink << ")";
}

std::string render_zernike(BwIndex idx, const SyntaxProfile& profile, bool normalized) {
  StringSink sink;
  if (normalized)
    emit_zernike(sink, idx, profile);
  else
    emit_unnormalized_zernike(sink, idx, profile);
  return sink.take();
}

}  // namespace zernike
