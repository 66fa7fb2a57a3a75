#pragma once

#include <optional>
#include <vector>

#include "family.hpp"

namespace siegel {

enum class OrbitKind { Escaping, Attracted, Captured, BoundaryLike, Unresolved };
enum class Disk { Delta0, Delta1 };

struct OrbitBudget {
  long max_iter = 262144;  // forward f-steps
  long tail = 4096;        // tail sample for recurrence statistics
};

struct OrbitVerdict {
  OrbitKind kind = OrbitKind::Unresolved;
  long iterations_used = 0;

  long first_exit = -1;  // Escaping

  int period = 0;  // Attracted
  cplx cycle_point;
  double multiplier_mod = 0.0;

  long entry_iter = -1;  // Captured, in f-steps
  Disk disk = Disk::Delta0;

  double min_tail_distance = 0.0;
  double tail_diameter = 0.0;
  double recurrence_eps = 0.0;
  double escape_radius = 0.0;
};

// Classification of one critical orbit with fixed test precedence:
// escape, attraction (period <= 8), boundary recurrence, capture,
// otherwise Unresolved.  Recurrence decisions are accepted only when
// stable against the shorter-prefix statistics of the same orbit.
OrbitVerdict classify_orbit(const Family &fam, cplx crit,
                            const OrbitBudget &budget = {});

// Circular mean of the angular steps of an orbit segment around `center`,
// in turns [0,1); empty optional when a point hits the center.
std::optional<double> mean_rotation_about(const std::vector<cplx> &pts,
                                          cplx center);

// Picks the critical point whose f^2-orbit encircles `center` with
// rotation ~ theta (the boundary/interior anchor for that disk).
std::optional<cplx> disk_anchor(const Family &fam, cplx center,
                                int probe_steps = 500);

}  // namespace siegel
