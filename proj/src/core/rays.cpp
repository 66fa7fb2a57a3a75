#include "rays.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "boundary.hpp"
#include "polynomial.hpp"

namespace siegel {

namespace {

long gcd_long(long a, long b) { return b == 0 ? a : gcd_long(b, a % b); }

// Roots of a z^3 + b z^2 + c z + d via one Newton root + deflation to a
// quadratic; stable enough here because the trace polishes afterwards.
std::array<cplx, 3> cubic_roots(cplx a, cplx b, cplx c, cplx d) {
  // Normalized: z^3 + p z^2 + q z + r.
  const cplx p = b / a, q = c / a, r = d / a;
  // Deterministic starting points; take the best Newton result.
  cplx best = 0.0;
  double best_res = 1e300;
  for (cplx seed : {cplx(1.0, 0.0), cplx(-1.0, 0.5), cplx(0.3, -1.1),
                    -p / 3.0}) {
    cplx z = seed;
    for (int it = 0; it < 80; ++it) {
      const cplx f = ((z + p) * z + q) * z + r;
      const cplx df = (3.0 * z + 2.0 * p) * z + q;
      if (std::abs(df) < 1e-300) break;
      const cplx step = f / df;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    const double res = std::abs(((z + p) * z + q) * z + r);
    if (res < best_res) {
      best_res = res;
      best = z;
    }
  }
  // Deflate: z^2 + (p + z0) z + (q + z0 (p + z0)).
  const cplx z0 = best;
  const cplx B = p + z0;
  const cplx C = q + z0 * B;
  const cplx disc = std::sqrt(B * B - 4.0 * C);
  cplx z1 = (-B + disc) / 2.0;
  cplx z2 = (-B - disc) / 2.0;
  // One Newton step each against the undeflated cubic.
  for (cplx *z : {&z1, &z2}) {
    for (int it = 0; it < 3; ++it) {
      const cplx f = ((*z + p) * *z + q) * *z + r;
      const cplx df = (3.0 * *z + 2.0 * p) * *z + q;
      if (std::abs(df) < 1e-300) break;
      *z -= f / df;
    }
  }
  return {z0, z1, z2};
}

struct LadderPoint {
  double logpot;  // log potential
  cplx z;
};

}  // namespace

cplx boettcher_scale(const Family &fam) {
  return principal_half_plane_sqrt(fam.a());
}

std::vector<cplx> period2_points(const Family &fam) {
  // f(f(z)) - z as a dense polynomial (degree 9).
  DensePolynomial f;
  f.coeffs = {1.0, fam.c(), fam.b(), fam.a()};
  DensePolynomial f2 = compose(f, f);
  f2.coeffs[1] -= 1.0;
  const RootSet rs = find_roots(f2);
  return rs.roots;
}

RayTrace trace_ray(const Family &fam, long num, long den, int depth) {
  if (den <= 0) fail(Status::InvalidArgument, "angle denominator must be > 0");
  num = ((num % den) + den) % den;
  const long g = gcd_long(num == 0 ? den : num, den);
  num /= g;
  den /= g;

  const cplx a = fam.a(), b = fam.b(), c = fam.c();
  const cplx s = boettcher_scale(fam);
  const cplx c0b = b / (3.0 * s);
  const cplx c1b = (c - b * b / (3.0 * a)) / (3.0 * s);

  const double R = fam.escape_radius();
  const double rho0 = std::max(R * R, 100.0);
  const double G0 = std::log(rho0);

  // Forward angle orbit under tripling (rational angles are preperiodic).
  std::vector<std::pair<long, long>> angles;  // (num, den) reduced
  {
    long n = num, d = den;
    while (true) {
      angles.emplace_back(n, d);
      long nn = (3 * n) % d;
      long dd = d;
      const long gg = gcd_long(nn == 0 ? dd : nn, dd);
      nn /= gg;
      dd /= gg;
      bool seen = false;
      for (auto &p : angles)
        if (p.first == nn && p.second == dd) seen = true;
      if (seen) break;
      n = nn;
      d = dd;
    }
  }
  const size_t na = angles.size();
  auto triple_index = [&](size_t i) {
    long nn = (3 * angles[i].first) % angles[i].second;
    long dd = angles[i].second;
    const long gg = gcd_long(nn == 0 ? dd : nn, dd);
    nn /= gg;
    dd /= gg;
    for (size_t j = 0; j < na; ++j)
      if (angles[j].first == nn && angles[j].second == dd) return j;
    fail(Status::Internal, "angle orbit is not closed");
  };
  std::vector<size_t> succ(na);
  for (size_t i = 0; i < na; ++i) succ[i] = triple_index(i);

  // Asymptotic inverse of Psi to second order.
  auto asym = [&](double t, double logpot) {
    const cplx w = std::polar(std::exp(logpot), kTwoPi * t);
    cplx z = (w - c0b) / s;
    for (int it = 0; it < 3; ++it) z = (w - c0b - c1b / z) / s;
    return z;
  };

  // Staggered ladders: M sub-levels per cube-root step; level l has
  // potential G0 * 3^(-l/M).
  const int M = 8;
  const double kappa = std::pow(3.0, -1.0 / M);
  const int max_levels = depth * M;

  std::vector<std::vector<cplx>> pts(na);  // per angle, per level
  for (size_t i = 0; i < na; ++i) {
    pts[i].reserve(static_cast<size_t>(max_levels));
    const double t = static_cast<double>(angles[i].first) /
                     static_cast<double>(angles[i].second);
    for (int j = 0; j < M; ++j)
      pts[i].push_back(asym(t, G0 * std::pow(kappa, j)));
  }

  RayTrace out;
  out.num = num;
  out.den = den;
  out.state = RayState::Stalled;

  std::vector<double> step_hist;
  step_hist.reserve(256);
  std::vector<bool> landed(na, false);
  std::vector<cplx> land_pt(na);

  const std::vector<cplx> p2 = period2_points(fam);
  auto near_fixed2 = [&](cplx z) {
    double best = 1e300;
    for (const cplx &p : p2) best = std::min(best, std::abs(z - p));
    return best;
  };

  for (int l = M; l < max_levels; ++l) {
    bool all_done = true;
    for (size_t i = 0; i < na; ++i) {
      if (landed[i]) {
        pts[i].push_back(pts[i].back());
        continue;
      }
      all_done = false;
      const cplx target = pts[succ[i]][static_cast<size_t>(l - M)];
      const cplx prev = pts[i][static_cast<size_t>(l - 1)];
      cplx pred = prev;
      if (l >= M + 1) {
        const cplx prev2 = pts[i][static_cast<size_t>(l - 2)];
        pred = prev + (prev - prev2);
      }
      const std::array<cplx, 3> cand = cubic_roots(a, b, c, 1.0 - target);
      size_t best_j = 0;
      double best_d = 1e300;
      for (size_t j = 0; j < 3; ++j) {
        const double d = std::abs(cand[j] - pred);
        if (d < best_d) {
          best_d = d;
          best_j = j;
        }
      }
      cplx w = cand[best_j];
      // Newton polish of f(w) = target.
      for (int it = 0; it < 4; ++it) {
        const cplx fv = fam.eval(w) - target;
        const cplx dv = fam.deriv(w);
        if (std::abs(dv) < 1e-300) break;
        w -= fv / dv;
      }
      const double step_len = std::abs(w - prev);
      if (step_hist.size() > 40) {
        std::vector<double> tmp(step_hist.end() - 40, step_hist.end());
        std::nth_element(tmp.begin(), tmp.begin() + 20, tmp.end());
        const double med = tmp[20];
        if (step_len > std::max(3.0 * med, 1e-9) && step_len > 1e-6 &&
            best_d > 0.5 * std::abs(prev - target)) {
          // Retry against the plain previous point before giving up.
          size_t alt = 0;
          double alt_d = 1e300;
          for (size_t j = 0; j < 3; ++j) {
            const double d = std::abs(cand[j] - prev);
            if (d < alt_d) {
              alt_d = d;
              alt = j;
            }
          }
          if (alt != best_j) {
            w = cand[alt];
            for (int it = 0; it < 4; ++it) {
              const cplx fv = fam.eval(w) - target;
              const cplx dv = fam.deriv(w);
              if (std::abs(dv) < 1e-300) break;
              w -= fv / dv;
            }
          }
        }
      }
      step_hist.push_back(std::abs(w - prev));
      pts[i].push_back(w);

      // Landing: 20 consecutive tiny moves and proximity to a fixed point
      // of f^2 (fixed points of f included).
      const size_t m = pts[i].size();
      if (m > static_cast<size_t>(M) + 24) {
        bool tiny = true;
        for (size_t k = 0; k < 20; ++k) {
          if (std::abs(pts[i][m - 1 - k] - pts[i][m - 2 - k]) >= 1e-9) {
            tiny = false;
            break;
          }
        }
        if (tiny && near_fixed2(pts[i].back()) < 1e-7) {
          landed[i] = true;
          land_pt[i] = pts[i].back();
        }
      }
    }
    if (all_done) break;
  }

  out.points = pts[0];
  out.steps = static_cast<long>(pts[0].size());
  if (landed[0]) {
    out.state = RayState::Landed;
    out.landing_point = land_pt[0];
    out.landing_residual =
        std::abs(fam.eval2(out.landing_point) - out.landing_point);
  } else if (std::abs(pts[0].back()) > rho0 * 2.0) {
    out.state = RayState::Escaped;
  }
  return out;
}

FixedPointTriple locate_p3(const Family &fam) {
  const std::array<cplx, 3> fx =
      cubic_roots(fam.a(), fam.b(), fam.c() - 1.0, 1.0);
  std::array<cplx, 3> mult;
  for (size_t i = 0; i < 3; ++i) {
    if (std::abs(fam.eval(fx[i]) - fx[i]) > 1e-10)
      fail(Status::NoConvergence, "fixed-point solve did not converge");
    mult[i] = fam.deriv(fx[i]);
    if (std::abs(mult[i]) < 1.0 - 1e-12)
      fail(Status::AttractingFixedPoint,
           "an attracting fixed point exists; the parameter is outside the "
           "boundary loci");
  }

  const RayTrace r0 = trace_ray(fam, 0, 1);
  const RayTrace rh = trace_ray(fam, 1, 2);
  if (r0.state != RayState::Landed || rh.state != RayState::Landed)
    fail(Status::NoConvergence, "fixed rays did not land");

  // P3 is the fixed point not matching either fixed-ray landing point.
  int i0 = -1, ih = -1;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(fx[static_cast<size_t>(i)] - r0.landing_point) < 1e-6)
      i0 = i;
    if (std::abs(fx[static_cast<size_t>(i)] - rh.landing_point) < 1e-6)
      ih = i;
  }
  if (i0 < 0 || ih < 0 || i0 == ih)
    fail(Status::NoCommonLanding,
         "fixed rays do not land at two distinct fixed points");
  const int i3 = 3 - i0 - ih;

  FixedPointTriple out;
  out.p1 = fx[static_cast<size_t>(i0)];
  out.p2 = fx[static_cast<size_t>(ih)];
  out.p3 = fx[static_cast<size_t>(i3)];
  out.m1 = mult[static_cast<size_t>(i0)];
  out.m2 = mult[static_cast<size_t>(ih)];
  out.m3 = mult[static_cast<size_t>(i3)];
  return out;
}

RayPattern ray_pattern_classify(const Family &fam) {
  const FixedPointTriple fp = locate_p3(fam);

  struct Pair {
    long n1, n2, den;
  };
  const std::array<Pair, 3> pairs = {Pair{1, 3, 4}, Pair{1, 3, 8},
                                     Pair{5, 7, 8}};
  int winner = -1;
  std::array<RayTrace, 3> t1s, t2s;
  for (int i = 0; i < 3; ++i) {
    t1s[static_cast<size_t>(i)] =
        trace_ray(fam, pairs[static_cast<size_t>(i)].n1,
                  pairs[static_cast<size_t>(i)].den);
    t2s[static_cast<size_t>(i)] =
        trace_ray(fam, pairs[static_cast<size_t>(i)].n2,
                  pairs[static_cast<size_t>(i)].den);
    const RayTrace &t1 = t1s[static_cast<size_t>(i)];
    const RayTrace &t2 = t2s[static_cast<size_t>(i)];
    if (t1.state != RayState::Landed || t2.state != RayState::Landed)
      continue;
    const bool coland =
        std::abs(t1.landing_point - t2.landing_point) < 1e-6 &&
        std::abs(t1.landing_point - fp.p3) < 1e-5;
    if (coland) {
      if (winner >= 0)
        fail(Status::NoCommonLanding,
             "two ray pairs co-land; landing detection is inconsistent");
      winner = i;
    }
  }
  if (winner < 0)
    fail(Status::NoCommonLanding, "no period-2 ray pair co-lands at P3");
  if (winner == 0) return RayPattern::Curve;

  // Arc case.  The wedge of angular width 1/4 spanned counterclockwise
  // from the first co-landing ray to the second contains the Siegel disk
  // with no critical point on its boundary: 0 for Gamma^1, 1 for Gamma^0.
  const RayTrace &t1 = t1s[static_cast<size_t>(winner)];
  const RayTrace &t2 = t2s[static_cast<size_t>(winner)];

  // Closed curve: ray1 outward-to-landing, ray2 landing-to-outward, then a
  // far arc from angle(t2 outer) counterclockwise... orientation does not
  // matter, |winding| = 1 marks the inside.
  std::vector<cplx> loop;
  loop.reserve(t1.points.size() + t2.points.size() + 40);
  for (const cplx &p : t1.points) loop.push_back(p);
  for (auto it = t2.points.rbegin(); it != t2.points.rend(); ++it)
    loop.push_back(*it);
  // Far arc from t2's outer end back to t1's outer end along the short
  // (quarter-turn) side.
  const cplx zout2 = t2.points.front();
  const cplx zout1 = t1.points.front();
  const double a2 = std::arg(zout2), a1 = std::arg(zout1);
  const double r2 = std::abs(zout2), r1 = std::abs(zout1);
  double sweep = a1 - a2;
  while (sweep > 3.14159265358979) sweep -= kTwoPi;
  while (sweep < -3.14159265358979) sweep += kTwoPi;
  const int arcs = 24;
  for (int k = 1; k <= arcs; ++k) {
    const double t = static_cast<double>(k) / arcs;
    loop.push_back(std::polar(r2 + (r1 - r2) * t, a2 + sweep * t));
  }

  const int w0 = polyline_winding(loop, cplx(0.0));
  const int w1 = polyline_winding(loop, cplx(1.0));
  if (std::abs(w0) == 1 && w1 == 0) return RayPattern::Arc1;
  if (std::abs(w1) == 1 && w0 == 0) return RayPattern::Arc0;
  fail(Status::NoCommonLanding,
       "wedge test cannot separate the Siegel disk centers");
}

}  // namespace siegel
