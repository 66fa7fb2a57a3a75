#pragma once

#include <vector>

#include "family.hpp"

namespace siegel {

enum class RayState { Landed, Stalled, Escaped };

struct RayTrace {
  long num = 0, den = 1;  // angle num/den in [0,1)
  std::vector<cplx> points;  // from large modulus inward
  RayState state = RayState::Stalled;
  cplx landing_point;
  double landing_residual = 0.0;  // |f^2(p) - p| at the landing point
  long steps = 0;
};

// Leading Boettcher normalization: Psi(z) ~ s z near infinity, s^2 = a,
// branch with Re s >= 0 (ties toward Im s >= 0).
cplx boettcher_scale(const Family &fam);

// Pullback trace of the external ray at rational angle num/den.  `depth`
// counts full cube-root potential levels; each level is subdivided into
// staggered sub-ladders so consecutive targets stay close.
RayTrace trace_ray(const Family &fam, long num, long den, int depth = 160);

struct FixedPointTriple {
  cplx p1, p2, p3;       // p1, p2 land the fixed rays; p3 separates
  cplx m1, m2, m3;       // multipliers
};

// Solves f(z) = z, computes multipliers, and identifies the separating
// fixed point as the one not landed by rays 0 and 1/2.  Fails with
// AttractingFixedPoint when some multiplier has modulus < 1.
FixedPointTriple locate_p3(const Family &fam);

enum class RayPattern { Curve, Arc1, Arc0 };

// Which period-2 ray pair co-lands at P3.  The Arc1/Arc0 decision is
// anchored geometrically: the quarter-turn wedge spanned by the co-landing
// pair contains the Siegel disk without boundary critical points.
RayPattern ray_pattern_classify(const Family &fam);

// All nine fixed points of f^2 (fixed points of f plus the three
// 2-cycles), used by the landing test.
std::vector<cplx> period2_points(const Family &fam);

}  // namespace siegel
