#pragma once

#include <string>
#include <vector>

#include "family.hpp"

namespace siegel {

enum class LocusKind { GammaCurve, Gamma1Arc };

struct LocusTrace {
  std::vector<cplx> points;
  bool closed = false;
  bool stalled = false;          // corrector gave up; points hold the partial trace
  double locus_tolerance = 0.0;  // alpha-plane acceptance gate
  double median_psi = 0.0;       // achieved membership indicator level
  std::string note;
};

// Boundary-membership indicator: distance from the free critical image to
// the sampled partner boundary (GammaCurve: dist(f(c1), dDelta0) with the
// Delta0 anchor; Gamma1Arc: dist(c_free, dDelta1) with a Delta1 anchor).
// Infinity when no anchor exists at alpha.
double locus_indicator(const RotationNumber &theta, LocusKind kind,
                       cplx alpha, long n_sample);

// Predictor-corrector continuation.  GammaCurve starts at alpha_* and
// closes into a Jordan loop; Gamma1Arc runs from alpha4 to alpha5.
// Throws ContinuationStalled with the partial trace embedded in the
// message when the corrector cannot reach tolerance.
LocusTrace trace_locus(const RotationNumber &theta, LocusKind kind,
                       long n_boundary_sample);

}  // namespace siegel
