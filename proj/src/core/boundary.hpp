#pragma once

#include <vector>

#include "orbit.hpp"

namespace siegel {

// Ordered sample of a Siegel-disk boundary: the f^2-orbit of the anchoring
// critical point (or of its image for the partner disk), with internal
// linearizing angles frac(k*theta).
struct SiegelBoundarySample {
  Disk disk = Disk::Delta0;
  cplx anchor;
  std::vector<cplx> points;          // points[k] = (f^2)^k(start)
  std::vector<double> internal_angles;

  cplx center() const { return disk == Disk::Delta0 ? cplx(0.0) : cplx(1.0); }
  std::vector<cplx> angle_sorted() const;
};

// Verifies the anchoring critical point is BoundaryLike for `disk`
// (NotOnBoundary otherwise), then samples.  `skip_verdict` skips the
// verification for callers that already hold a verdict.
SiegelBoundarySample siegel_boundary(const Family &fam, Disk disk,
                                     long n_points,
                                     bool skip_verdict = false);

// Raw f^2-orbit sampling from an arbitrary start point (no verdict).
std::vector<cplx> f2_orbit(const Family &fam, cplx start, long n_points);

struct RotationEstimate {
  double estimate = 0.0;
  double confidence = 0.0;
};

// Combinatorial rotation number of the return map in the geometric
// circular order (angles about the sample centroid).  Degenerate when the
// two half-sample estimates disagree beyond tolerance.
RotationEstimate rotation_number_estimate(const std::vector<cplx> &points);

enum class LocusCase { GammaCurve, Gamma0, Gamma1 };

struct ConformalAngle {
  double radians = 0.0;  // [0, 2 pi)
  long matched_iterate = 0;
  double match_distance = 0.0;
  double precision = 0.0;
};

// Conformal angle via the linearizing parametrization of the boundary
// sample anchored at the critical point normalized to angle 0:
//   GammaCurve: target f(c1) on the boundary of Delta0 anchored at c0;
//   Gamma0:     target c1 on the boundary of Delta0 anchored at c0;
//   Gamma1:     target c1 on the boundary of Delta1 anchored at c0.
// Anchor/target are identified dynamically (disk membership), not by the
// algebraic branch labels.
ConformalAngle conformal_angle(const Family &fam, LocusCase which,
                               long n_sample);

double hausdorff_boundary_distance(const Family &f1, const Family &f2,
                                   Disk disk, long n_points);

// ------------------------------------------------------------ geometry

// Winding number of a closed polyline around a point (sum of wrapped
// angular increments / 2 pi, rounded).
int polyline_winding(const std::vector<cplx> &poly, cplx around);

// Exact segment-crossing test over the closed polyline, grid-accelerated;
// shared endpoints of adjacent segments do not count.
bool polyline_simple(const std::vector<cplx> &poly);

// True when two closed polylines have no crossing segments.
bool polylines_disjoint(const std::vector<cplx> &a, const std::vector<cplx> &b);

// Minimum distance from z to a polyline (segments, not just vertices).
double distance_to_polyline(cplx z, const std::vector<cplx> &poly,
                            bool closed);

// Directed/undirected Hausdorff distance between point clouds
// (grid-accelerated nearest neighbors).
double hausdorff_distance(const std::vector<cplx> &a,
                          const std::vector<cplx> &b);

double median_nn_spacing_public(const std::vector<cplx> &pts);

}  // namespace siegel
