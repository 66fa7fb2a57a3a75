#pragma once

#include <vector>

#include "rotation.hpp"

namespace siegel {

// Dense polynomial with complex coefficients, ascending degree.
struct DensePolynomial {
  std::vector<cplx> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx eval(cplx z) const;
  cplx deriv_eval(cplx z) const;
  double max_coeff_abs() const;
  void trim(double tol = 0.0);

  static DensePolynomial constant(cplx c) { return {{c}}; }
};

DensePolynomial operator+(const DensePolynomial &p, const DensePolynomial &q);
DensePolynomial operator-(const DensePolynomial &p, const DensePolynomial &q);
DensePolynomial operator*(const DensePolynomial &p, const DensePolynomial &q);
DensePolynomial operator*(cplx s, const DensePolynomial &p);

// p(q(z)) by Horner over polynomials.
DensePolynomial compose(const DensePolynomial &p, const DensePolynomial &q);

struct RootSet {
  std::vector<cplx> roots;
  std::vector<double> residuals;  // |p(root)|
};

// Simultaneous Aberth-Ehrlich iteration from a circle of initial guesses,
// finished with Newton polish.  Deterministic for a fixed input.
RootSet find_roots(const DensePolynomial &p);

// Degree-8 critical-relation polynomial, expanded from the quartic in
// x = lambda/alpha + alpha + 2, y = alpha + 1 after clearing alpha^4.
DensePolynomial degree8_from_substitution(const RotationNumber &theta);

// Coefficients exactly as printed (including the 0 alpha^6 term and
// a5 = 3 lambda^2 - 12 lambda + 522), kept for the cross-check report.
DensePolynomial degree8_paper_coefficients(const RotationNumber &theta);

struct Degree8Root {
  cplx alpha;
  double residual;
  bool maps_c0_to_c1 = false;  // branch-labelled critical points
  bool maps_c1_to_c0 = false;
  int conjugate_index = -1;
  double pair_distance = 0.0;
};

// Roots of the substitution-derived polynomial together with the
// critical-mapping direction at each root and the alpha <-> lambda/alpha
// pairing.
std::vector<Degree8Root> classify_degree8_roots(const RotationNumber &theta);

}  // namespace siegel
