#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace siegel {

using cplx = std::complex<double>;

enum class Status {
  Ok = 0,
  InvalidArgument,
  DegenerateParameter,
  NoConvergence,
  NotOnBoundary,
  DegenerateSample,
  NoMatch,
  BranchJump,
  NoCommonLanding,
  AttractingFixedPoint,
  ContinuationStalled,
  IllegalLabel,
  IllegalChain,
  UnknownAngle,
  AmbiguousRoot,
  BufferTooSmall,
  Io,
  Internal,
};

class SiegelError : public std::runtime_error {
 public:
  SiegelError(Status code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string &msg) {
  throw SiegelError(code, msg);
}

// Square root with Re >= 0, ties broken toward Im >= 0.  Used wherever a
// branch of a square root has to be pinned (critical points, Boettcher
// scale, special parameters).
inline cplx principal_half_plane_sqrt(cplx w) {
  cplx s = std::sqrt(w);
  if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) s = -s;
  return s;
}

inline double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;
  return f;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace siegel
