#pragma once

#include "rotation.hpp"

namespace siegel {

// One member of the cubic family with a 2-cycle of Siegel disks centered
// at 0 and 1.  Coefficients are stored in monomial form,
//   f(z) = a z^3 + b z^2 + c z + 1,
// so the cycle and multiplier identities read a+b+c+1 = 0 and
// c(3a+2b+c) = lambda.
class Family {
 public:
  Family(const RotationNumber &theta, cplx alpha);

  const RotationNumber &theta() const { return theta_; }
  cplx lambda() const { return theta_.lambda; }
  cplx alpha() const { return alpha_; }
  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }

  cplx eval(cplx z) const { return ((a_ * z + b_) * z + c_) * z + 1.0; }
  cplx deriv(cplx z) const { return (3.0 * a_ * z + 2.0 * b_) * z + c_; }
  cplx eval2(cplx z) const { return eval(eval(z)); }

  // "-" branch first, "+" branch second; the square root is taken with
  // nonnegative real part (ties toward nonnegative imaginary part).  At a
  // double-critical parameter both coincide.
  cplx crit0() const { return crit0_; }
  cplx crit1() const { return crit1_; }

  // R with |f(z)| >= 2|z| whenever |z| >= R.
  double escape_radius() const { return escape_radius_; }

 private:
  RotationNumber theta_;
  cplx alpha_, a_, b_, c_;
  cplx crit0_, crit1_;
  double escape_radius_;
};

// lambda/alpha; the conjugation tau(z) = 1-z carries f_alpha to this
// parameter's map.
cplx conjugate_parameter(const RotationNumber &theta, cplx alpha);

struct SpecialParameters {
  cplx alpha0, alpha0_tilde;          // punctures: alpha^2+2alpha+lambda = 0
  cplx alpha4, alpha5;                // double-critical with |.| > 1
  cplx alpha4_tilde, alpha5_tilde;    // lambda/alpha4, lambda/alpha5
  cplx alpha_star, alpha_star_tilde;  // square roots of lambda
};

SpecialParameters special_parameters(const RotationNumber &theta);

}  // namespace siegel
