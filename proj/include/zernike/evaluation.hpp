#pragma once

#include <span>
#include <vector>

#include "zernike/coefficients.hpp"

namespace zernike {

/// Whether eval_radial rejects rho outside [0, 1]. The extended mode
/// evaluates the polynomial on the whole real line.
enum class RangeCheck { strict, extended };

/// A point on the unit disk in polar coordinates.
class EvalPoint {
public:
  /// Throws DomainError unless 0 <= rho <= 1 and theta is finite.
  EvalPoint(double rho, double theta);
  double rho() const noexcept { return rho_; }
  double theta() const noexcept { return theta_; }

private:
  double rho_;
  double theta_;
};

/// c_0..c_k rounded to double (exact for every coefficient below 2^53).
std::vector<double> coefficients_as_double(const RadialPoly& poly);

double eval_radial(const RadialPoly& poly, double rho, RangeCheck check = RangeCheck::strict);

/// Batch form of eval_radial over the fastest kernel; no range check.
void eval_radial_batch(const RadialPoly& poly, std::span<const double> rho, std::span<double> out);

/// 1, cos(f theta) or sin(f theta).
double eval_angular(const AngularFactor& angular, double theta) noexcept;

enum class Normalized : bool { no = false, yes = true };

double eval_zernike(const ZernikeSpec& spec, EvalPoint pt, Normalized normalized = Normalized::yes);

}  // namespace zernike
