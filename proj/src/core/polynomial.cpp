#include "polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "family.hpp"

namespace siegel {

cplx DensePolynomial::eval(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

cplx DensePolynomial::deriv_eval(cplx z) const {
  cplx acc = 0.0;
  for (int k = degree(); k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * coeffs[static_cast<size_t>(k)];
  return acc;
}

double DensePolynomial::max_coeff_abs() const {
  double m = 0.0;
  for (const cplx &c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

void DensePolynomial::trim(double tol) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol)
    coeffs.pop_back();
}

DensePolynomial operator+(const DensePolynomial &p, const DensePolynomial &q) {
  DensePolynomial r;
  r.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()), cplx(0.0));
  for (size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i] += p.coeffs[i];
  for (size_t i = 0; i < q.coeffs.size(); ++i) r.coeffs[i] += q.coeffs[i];
  return r;
}

DensePolynomial operator-(const DensePolynomial &p, const DensePolynomial &q) {
  return p + (cplx(-1.0) * q);
}

DensePolynomial operator*(const DensePolynomial &p, const DensePolynomial &q) {
  DensePolynomial r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, cplx(0.0));
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    for (size_t j = 0; j < q.coeffs.size(); ++j)
      r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  return r;
}

DensePolynomial operator*(cplx s, const DensePolynomial &p) {
  DensePolynomial r = p;
  for (cplx &c : r.coeffs) c *= s;
  return r;
}

DensePolynomial compose(const DensePolynomial &p, const DensePolynomial &q) {
  DensePolynomial acc = DensePolynomial::constant(0.0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * q + DensePolynomial::constant(*it);
  return acc;
}

RootSet find_roots(const DensePolynomial &poly) {
  DensePolynomial p = poly;
  p.trim();
  const int n = p.degree();
  if (n < 1) fail(Status::InvalidArgument, "find_roots needs degree >= 1");
  const double scale = p.max_coeff_abs();
  if (scale == 0.0) fail(Status::InvalidArgument, "zero polynomial");

  // Initial guesses on a circle sized by the Cauchy bound, slightly
  // rotated so no guess starts on a symmetry axis.
  double radius = 0.0;
  const double lead = std::abs(p.coeffs.back());
  for (int k = 0; k < n; ++k)
    radius = std::max(radius,
                      std::abs(p.coeffs[static_cast<size_t>(k)]) / lead);
  radius = 1.0 + radius;

  std::vector<cplx> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<size_t>(k)] =
        std::polar(radius, kTwoPi * (static_cast<double>(k) + 0.3712) /
                               static_cast<double>(n));

  const int max_aberth = 300;
  for (int iter = 0; iter < max_aberth; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      const cplx zk = z[static_cast<size_t>(k)];
      const cplx pv = p.eval(zk);
      const cplx dv = p.deriv_eval(zk);
      cplx newton = (dv != cplx(0.0)) ? pv / dv : cplx(1e-12);
      cplx sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (zk - z[static_cast<size_t>(j)]);
      const cplx denom = 1.0 - newton * sum;
      const cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      z[static_cast<size_t>(k)] = zk - step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14 * radius) break;
  }

  // Newton polish, <= 50 steps each.
  for (int k = 0; k < n; ++k) {
    cplx zk = z[static_cast<size_t>(k)];
    for (int it = 0; it < 50; ++it) {
      const cplx pv = p.eval(zk);
      if (std::abs(pv) < 1e-12 * scale) break;
      const cplx dv = p.deriv_eval(zk);
      if (std::abs(dv) < 1e-300) break;
      const cplx step = pv / dv;
      zk -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(zk))) break;
    }
    z[static_cast<size_t>(k)] = zk;
  }

  RootSet rs;
  rs.roots = z;
  rs.residuals.reserve(static_cast<size_t>(n));
  double worst_res = 0.0;
  for (const cplx &r : z) {
    const double res = std::abs(p.eval(r));
    rs.residuals.push_back(res);
    worst_res = std::max(worst_res, res);
  }
  if (worst_res > 1e-8 * scale)
    fail(Status::NoConvergence,
         "root refinement stalled; worst residual " + std::to_string(worst_res));
  return rs;
}

DensePolynomial degree8_from_substitution(const RotationNumber &theta) {
  const cplx lam = theta.lambda;
  // alpha * x = alpha^2 + 2 alpha + lambda, so multiplying the quartic in x
  // by alpha^4 turns x^k into (alpha^2 + 2 alpha + lambda)^k * alpha^(4-k).
  const DensePolynomial ax{{lam, 2.0, 1.0}};
  const DensePolynomial al{{0.0, 1.0}};
  const DensePolynomial y{{1.0, 1.0}};

  auto pow = [](const DensePolynomial &p, int e) {
    DensePolynomial r = DensePolynomial::constant(1.0);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
  };

  const DensePolynomial y2 = y * y, y3 = y2 * y, y4 = y3 * y;
  const DensePolynomial q3 =
      cplx(3.0) * y2 - DensePolynomial{{12.0, 14.0}};  // 3y^2 - 14y - 12
  const DensePolynomial q2 =
      cplx(-6.0) * y3 + cplx(6.0) * y2 + DensePolynomial{{3.0, 39.0}};
  const DensePolynomial q1 = cplx(3.0) * y4 + cplx(16.0) * y3 - cplx(39.0) * y2;
  const DensePolynomial q0 = cplx(-8.0) * y4;

  DensePolynomial out = cplx(4.0) * pow(ax, 4);
  out = out + q3 * pow(ax, 3) * al;
  out = out + q2 * pow(ax, 2) * pow(al, 2);
  out = out + q1 * ax * pow(al, 3);
  out = out + q0 * pow(al, 4);
  out.coeffs.resize(9, cplx(0.0));
  return out;
}

DensePolynomial degree8_paper_coefficients(const RotationNumber &theta) {
  const cplx lam = theta.lambda;
  const cplx lam2 = lam * lam, lam3 = lam2 * lam, lam4 = lam3 * lam;
  DensePolynomial p;
  p.coeffs = {4.0 * lam4,
              9.0 * lam3,
              8.0 * lam3,
              3.0 * lam3 + 12.0 * lam2,
              6.0 * lam2 + 18.0 * lam,
              3.0 * lam2 - 12.0 * lam + 522.0,
              0.0,
              9.0,
              4.0};
  return p;
}

std::vector<Degree8Root> classify_degree8_roots(const RotationNumber &theta) {
  const DensePolynomial p = degree8_from_substitution(theta);
  const RootSet rs = find_roots(p);
  const int n = static_cast<int>(rs.roots.size());

  std::vector<Degree8Root> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Degree8Root &rec = out[static_cast<size_t>(i)];
    rec.alpha = rs.roots[static_cast<size_t>(i)];
    rec.residual = rs.residuals[static_cast<size_t>(i)];
    Family fam(theta, rec.alpha);
    const double d01 = std::abs(fam.eval(fam.crit0()) - fam.crit1());
    const double d10 = std::abs(fam.eval(fam.crit1()) - fam.crit0());
    rec.maps_c0_to_c1 = d01 < 1e-8;
    rec.maps_c1_to_c0 = d10 < 1e-8;
    if (rec.maps_c0_to_c1 && rec.maps_c1_to_c0 &&
        std::abs(fam.crit0() - fam.crit1()) > 1e-8)
      fail(Status::AmbiguousRoot,
           "both critical orderings hold away from a double critical point");

    const cplx partner = theta.lambda / rec.alpha;
    double best = 1e300;
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(rs.roots[static_cast<size_t>(j)] - partner);
      if (d < best) {
        best = d;
        rec.conjugate_index = j;
      }
    }
    rec.pair_distance = best;
  }
  return out;
}

}  // namespace siegel
