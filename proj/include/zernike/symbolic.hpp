#pragma once

// Symbolic emitters for polynomials and Zernike circular polynomials.
//
// Every emitter appends to a TextSink; nothing is buffered or reordered.
// Each polynomial term is followed by a single space, so LaTeX output reads
// "6\rho^{4} -6\rho^{2} +1 ". An all-zero polynomial is rendered as "0".

#include <cstdint>
#include <span>
#include <string>

#include "zernike/exact_int.hpp"
#include "zernike/indexing.hpp"
#include "zernike/text_sink.hpp"

namespace zernike {

/// Tokens used to spell a polynomial and its angular and normalization
/// factors for one target syntax.
struct SyntaxProfile {
  std::string variable_token;  // radial variable
  std::string power_operator;
  bool power_braces = false;   // wrap exponents as {p}
  std::string multiply_token;  // empty means juxtaposition
  std::string angle_token;
  std::string cos_token;
  std::string sin_token;
  std::string sqrt_open;
  std::string sqrt_close;

  /// \rho, ^, braced exponents, \cos(2\theta), \sqrt{10}.
  static SyntaxProfile latex();
  /// r, ^, explicit '*', cos(2*theta), sqrt(10).
  static SyntaxProfile plain();
  /// rho, **, explicit '*', cos(2*theta), sqrt(10).
  static SyntaxProfile code();

  /// Throws DomainError if the variable or power token is empty.
  void validate() const;
};

void emit_sign(TextSink& sink, const ExactInt& c, std::size_t position);

void emit_unsigned_term(TextSink& sink, const SyntaxProfile& profile, const ExactInt& c,
                        std::int64_t power);

void emit_term(TextSink& sink, std::size_t position, const SyntaxProfile& profile,
               const ExactInt& c, std::int64_t power);

/// Terms with a zero coefficient are skipped. coeffs and powers must have
/// the same length.
void emit_polynomial(TextSink& sink, const SyntaxProfile& profile,
                     std::span<const ExactInt> coeffs, std::span<const std::int64_t> powers);

void emit_radial(TextSink& sink, BwIndex idx, const SyntaxProfile& profile = SyntaxProfile::latex());

/// Nothing for m = 0; cos/sin(|m| theta) chosen by the parity of j.
void emit_angular(TextSink& sink, BwIndex idx, const SyntaxProfile& profile = SyntaxProfile::latex());

void emit_normalization(TextSink& sink, BwIndex idx,
                        const SyntaxProfile& profile = SyntaxProfile::latex());

/// R_n^m(rho) Theta_m(theta). The radial part is parenthesized unless
/// m = 0 or it has a single term.
void emit_unnormalized_zernike(TextSink& sink, BwIndex idx,
                               const SyntaxProfile& profile = SyntaxProfile::latex());

/// N_n^m R_n^m(rho) Theta_m(theta). A unit normalization factor is omitted.
void emit_zernike(TextSink& sink, BwIndex idx, const SyntaxProfile& profile = SyntaxProfile::latex());

/// Convenience wrapper returning emit_zernike / emit_unnormalized_zernike
/// output as a string.
std::string render_zernike(BwIndex idx, const SyntaxProfile& profile, bool normalized);

}  // namespace zernike
