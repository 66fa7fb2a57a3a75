#include "family.hpp"

#include <cmath>

namespace siegel {

namespace {
constexpr double kDegenerateTol = 1e-14;
}

Family::Family(const RotationNumber &theta, cplx alpha) : theta_(theta) {
  const cplx lam = theta.lambda;
  if (std::abs(alpha) < kDegenerateTol)
    fail(Status::DegenerateParameter, "alpha = 0 is a puncture");
  const cplx root = std::sqrt(1.0 - lam);
  if (std::abs(alpha - (-1.0 + root)) < kDegenerateTol ||
      std::abs(alpha - (-1.0 - root)) < kDegenerateTol)
    fail(Status::DegenerateParameter,
         "alpha is a root of lambda/alpha + alpha + 2 = 0");

  alpha_ = alpha;
  const cplx lam_over = lam / alpha;
  a_ = lam_over + alpha + 2.0;
  b_ = -(lam_over + 2.0 * alpha + 3.0);
  c_ = alpha;
  if (std::abs(a_) < kDegenerateTol)
    fail(Status::DegenerateParameter, "leading coefficient vanishes");

  const cplx disc = principal_half_plane_sqrt((lam_over + alpha + 3.0) *
                                                  (lam_over + alpha + 3.0) -
                                              lam);
  const cplx num = lam_over + 2.0 * alpha + 3.0;
  crit0_ = (num - disc) / (3.0 * a_);
  crit1_ = (num + disc) / (3.0 * a_);

  escape_radius_ = std::max(
      4.0, (1.0 + std::abs(a_) + std::abs(b_) + std::abs(c_)) / std::abs(a_));
}

cplx conjugate_parameter(const RotationNumber &theta, cplx alpha) {
  if (std::abs(alpha) < kDegenerateTol)
    fail(Status::DegenerateParameter, "alpha = 0 has no conjugate");
  const cplx conj = theta.lambda / alpha;
  Family probe(theta, conj);  // validates the conjugate parameter
  (void)probe;
  return conj;
}

SpecialParameters special_parameters(const RotationNumber &theta) {
  const cplx lam = theta.lambda;
  SpecialParameters sp;

  // Punctures alpha^2 + 2 alpha + lambda = 0.
  const cplx r = std::sqrt(1.0 - lam);
  sp.alpha0 = -1.0 + r;
  sp.alpha0_tilde = -1.0 - r;

  // Double-critical parameters: (lambda/alpha + alpha + 3)^2 = lambda,
  // i.e. alpha^2 + (3 -+ sqrt(lambda)) alpha + lambda = 0.  Each quadratic
  // has root product lambda, so exactly one root lies outside the unit
  // circle; that one gets the plain label.
  const cplx sq = principal_half_plane_sqrt(lam);
  auto outer_root = [&](cplx B) {
    const cplx d = std::sqrt(B * B - 4.0 * lam);
    const cplx r1 = (-B + d) / 2.0;
    const cplx r2 = (-B - d) / 2.0;
    return std::abs(r1) > std::abs(r2) ? r1 : r2;
  };
  sp.alpha4 = outer_root(3.0 - sq);
  sp.alpha5 = outer_root(3.0 + sq);
  sp.alpha4_tilde = lam / sp.alpha4;
  sp.alpha5_tilde = lam / sp.alpha5;

  sp.alpha_star = std::polar(1.0, kTwoPi * theta.value / 2.0);
  sp.alpha_star_tilde = -sp.alpha_star;
  return sp;
}

}  // namespace siegel
