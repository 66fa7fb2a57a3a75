#include "rotation.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

RotationNumber RotationNumber::golden(int depth) {
  if (depth < 1) fail(Status::InvalidArgument, "cf depth must be >= 1");
  return from_cf(std::vector<int>(static_cast<size_t>(depth), 1));
}

RotationNumber RotationNumber::from_cf(const std::vector<int> &cf) {
  if (cf.empty()) fail(Status::InvalidArgument, "empty continued fraction");
  for (int a : cf)
    if (a < 1) fail(Status::InvalidArgument, "partial quotients must be >= 1");

  RotationNumber r;
  r.cf = cf;
  r.bound = *std::max_element(cf.begin(), cf.end());

  // Backward recurrence in extended precision; for depth >= 40 the
  // truncation error is far below one ulp of double.
  long double x = 0.0L;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it)
    x = 1.0L / (static_cast<long double>(*it) + x);
  r.value = static_cast<double>(x);
  r.lambda = std::polar(1.0, kTwoPi * r.value);
  return r;
}

}  // namespace siegel
