#include "orbit.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

namespace {

double circular_distance(double a, double b) {
  const double d = std::abs(frac(a) - frac(b));
  return std::min(d, 1.0 - d);
}

// Median nearest-neighbor spacing of a planar point set via a uniform grid.
double median_nn_spacing(const std::vector<cplx> &pts) {
  const size_t n = pts.size();
  if (n < 2) return 0.0;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const cplx &p : pts) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const double w = std::max({xmax - xmin, ymax - ymin, 1e-30});
  const int side = std::max(
      1, static_cast<int>(std::sqrt(static_cast<double>(n) / 2.0)));
  const double cell = w / side;
  std::vector<std::vector<int>> grid(
      static_cast<size_t>(side) * static_cast<size_t>(side));
  auto cell_of = [&](cplx p) {
    int cx = std::min(side - 1, std::max(0, static_cast<int>(
                                                (p.real() - xmin) / cell)));
    int cy = std::min(side - 1, std::max(0, static_cast<int>(
                                                (p.imag() - ymin) / cell)));
    return cy * side + cx;
  };
  for (size_t i = 0; i < n; ++i)
    grid[static_cast<size_t>(cell_of(pts[i]))].push_back(static_cast<int>(i));

  std::vector<double> nn(n, 1e300);
  for (size_t i = 0; i < n; ++i) {
    const cplx p = pts[i];
    int cx = static_cast<int>((p.real() - xmin) / cell);
    int cy = static_cast<int>((p.imag() - ymin) / cell);
    cx = std::min(side - 1, std::max(0, cx));
    cy = std::min(side - 1, std::max(0, cy));
    for (int ring = 0; ring < side; ++ring) {
      bool found = nn[i] < 1e299;
      // On ring r look at the square annulus of cells at Chebyshev
      // distance r; stop one ring after the first hit.
      for (int dy = -ring; dy <= ring; ++dy)
        for (int dx = -ring; dx <= ring; ++dx) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          const int gx = cx + dx, gy = cy + dy;
          if (gx < 0 || gy < 0 || gx >= side || gy >= side) continue;
          for (int j : grid[static_cast<size_t>(gy * side + gx)]) {
            if (static_cast<size_t>(j) == i) continue;
            nn[i] = std::min(nn[i], std::abs(pts[static_cast<size_t>(j)] - p));
          }
        }
      if (found && ring > 0) break;
      if (nn[i] < ring * cell && ring > 0) break;
    }
  }
  std::nth_element(nn.begin(), nn.begin() + static_cast<long>(n / 2),
                   nn.end());
  return nn[n / 2];
}

struct RecurrenceScan {
  double m_full = 1e300;   // min over the whole orbit
  double m_q1 = 1e300;     // min over the first 1/16
  double m_q2 = 1e300;     // min over the first 1/4
};

}  // namespace

std::optional<double> mean_rotation_about(const std::vector<cplx> &pts,
                                          cplx center) {
  if (pts.size() < 8) return std::nullopt;
  cplx acc = 0.0;
  for (size_t k = 1; k < pts.size(); ++k) {
    const cplx u = pts[k - 1] - center;
    const cplx v = pts[k] - center;
    if (std::abs(u) < 1e-14 || std::abs(v) < 1e-14) return std::nullopt;
    acc += (v / u) / std::abs(v / u);
  }
  if (std::abs(acc) < 1e-9) return std::nullopt;
  return frac(std::arg(acc) / kTwoPi);
}

std::optional<cplx> disk_anchor(const Family &fam, cplx center,
                                int probe_steps) {
  const double theta = fam.theta().value;
  const double R = fam.escape_radius();
  for (cplx cand : {fam.crit0(), fam.crit1()}) {
    std::vector<cplx> orbit;
    orbit.reserve(static_cast<size_t>(probe_steps));
    cplx z = cand;
    bool ok = true;
    for (int k = 0; k < probe_steps; ++k) {
      orbit.push_back(z);
      z = fam.eval2(z);
      if (!std::isfinite(z.real()) || std::abs(z) > R) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const auto rot = mean_rotation_about(orbit, center);
    if (rot && circular_distance(*rot, theta) < 0.15) return cand;
  }
  return std::nullopt;
}

OrbitVerdict classify_orbit(const Family &fam, cplx crit,
                            const OrbitBudget &budget_in) {
  OrbitBudget budget = budget_in;
  if (budget.max_iter <= 0) budget.max_iter = OrbitBudget{}.max_iter;
  if (budget.tail <= 0) budget.tail = OrbitBudget{}.tail;
  budget.tail = std::min<long>(budget.tail, budget.max_iter / 4 + 1);

  OrbitVerdict v;
  v.escape_radius = fam.escape_radius();

  // Escape scan over forward f-steps; the f^2-orbit (even steps from the
  // critical point) is kept for the recurrence stages.
  const long n2 = budget.max_iter / 2;
  std::vector<cplx> orbit2;
  orbit2.reserve(static_cast<size_t>(n2) + 1);
  orbit2.push_back(crit);
  {
    cplx z = crit;
    for (long k = 1; k <= budget.max_iter; ++k) {
      z = fam.eval(z);
      v.iterations_used = k;
      if (std::abs(z) > v.escape_radius) {
        v.kind = OrbitKind::Escaping;
        v.first_exit = k;
        return v;
      }
      if ((k & 1L) == 0) orbit2.push_back(z);
    }
  }

  // Attraction: try to close up a cycle of period <= 8 from the orbit end.
  {
    const cplx w0 = orbit2.back();
    for (int p = 1; p <= 8; ++p) {
      cplx w = w0;
      for (int i = 0; i < p; ++i) w = fam.eval(w);
      if (std::abs(w - w0) > 1e-4) continue;
      // Iterate f^p to convergence; a neutral "cycle" will not close up.
      cplx x = w0;
      bool closed = false;
      for (int it = 0; it < 400; ++it) {
        cplx y = x;
        for (int i = 0; i < p; ++i) y = fam.eval(y);
        if (std::abs(y - x) < 1e-12) {
          closed = true;
          x = y;
          break;
        }
        x = y;
      }
      if (!closed) continue;
      cplx mult = 1.0;
      cplx y = x;
      int prim = p;
      for (int i = 0; i < p; ++i) {
        mult *= fam.deriv(y);
        y = fam.eval(y);
        if (i + 1 < p && std::abs(y - x) < 1e-10) {
          prim = i + 1;  // primitive period divides p
          mult = 1.0;
          y = x;
          for (int j = 0; j < prim; ++j) {
            mult *= fam.deriv(y);
            y = fam.eval(y);
          }
          break;
        }
      }
      if (std::abs(mult) < 1.0 - 1e-9) {
        v.kind = OrbitKind::Attracted;
        v.period = prim;
        v.cycle_point = x;
        v.multiplier_mod = std::abs(mult);
        return v;
      }
    }
  }

  // Recurrence statistics on the f^2-orbit.
  const size_t N = orbit2.size();
  RecurrenceScan scan;
  for (size_t k = 1; k < N; ++k) {
    const double d = std::abs(orbit2[k] - crit);
    scan.m_full = std::min(scan.m_full, d);
    if (k < N / 16) scan.m_q1 = std::min(scan.m_q1, d);
    if (k < N / 4) scan.m_q2 = std::min(scan.m_q2, d);
  }
  v.min_tail_distance = scan.m_full;

  const size_t tail_len = std::min(static_cast<size_t>(budget.tail), N / 2);
  std::vector<cplx> tail(orbit2.end() - static_cast<long>(tail_len),
                         orbit2.end());
  const double eps_rec = 5.0 * median_nn_spacing(tail);
  v.recurrence_eps = eps_rec;

  double tail_diam = 0.0;
  cplx mean = 0.0;
  for (const cplx &p : tail) mean += p;
  mean /= static_cast<double>(tail.size());
  for (const cplx &p : tail)
    tail_diam = std::max(tail_diam, 2.0 * std::abs(p - mean));
  v.tail_diameter = tail_diam;

  // Winding center of the tail: rotation ~ theta about exactly one of 0, 1.
  const double theta = fam.theta().value;
  std::optional<Disk> center;
  {
    const auto r0 = mean_rotation_about(tail, cplx(0.0));
    const auto r1 = mean_rotation_about(tail, cplx(1.0));
    const bool w0 = r0 && circular_distance(*r0, theta) < 0.15;
    const bool w1 = r1 && circular_distance(*r1, theta) < 0.15;
    if (w0 && !w1) center = Disk::Delta0;
    if (w1 && !w0) center = Disk::Delta1;
  }

  // BoundaryLike: recurrent to the critical point, either within eps_rec
  // outright or with a sustained decay of the running minimum (the
  // boundary is reached slowly near critical corners).
  if (center) {
    const bool direct = scan.m_full < eps_rec;
    const bool decaying = scan.m_full < 0.12 * std::max(tail_diam, 1e-30) &&
                          scan.m_full <= 0.92 * scan.m_q2 &&
                          scan.m_q2 <= 0.92 * scan.m_q1;
    if (direct || decaying) {
      v.kind = OrbitKind::BoundaryLike;
      v.disk = *center;
      return v;
    }
  }

  // Captured: tail sits on an invariant loop away from the critical point
  // with a stalled recurrence minimum.
  if (center) {
    double tail_min = 1e300;
    for (const cplx &p : tail) tail_min = std::min(tail_min, std::abs(p - crit));
    const bool stalled = scan.m_full >= 0.92 * scan.m_q2;
    if (tail_min > 3.0 * eps_rec && stalled) {
      v.kind = OrbitKind::Captured;
      v.disk = *center;
      // Entry: walk back from the tail while even steps stay inside the
      // inflated annulus of the eventual loop, then look one f-step
      // further to see which disk is entered first.
      const cplx ctr = (*center == Disk::Delta0) ? cplx(0.0) : cplx(1.0);
      double rlo = 1e300, rhi = 0.0;
      for (const cplx &p : tail) {
        rlo = std::min(rlo, std::abs(p - ctr));
        rhi = std::max(rhi, std::abs(p - ctr));
      }
      rlo *= 0.7;
      rhi = rhi * 1.3 + 1e-12;
      size_t k = N - 1;
      while (k > 0) {
        const double r = std::abs(orbit2[k - 1] - ctr);
        if (r < rlo || r > rhi) break;
        --k;
      }
      v.entry_iter = static_cast<long>(2 * k);
      if (k > 0) {
        // The odd point before the first even in-loop point lies in the
        // partner disk when the capture happened at an odd step.
        const cplx odd_prev = fam.eval(orbit2[k - 1]);
        const cplx other = (*center == Disk::Delta0) ? cplx(1.0) : cplx(0.0);
        if (std::abs(odd_prev - other) < std::abs(odd_prev - ctr) &&
            std::abs(odd_prev - other) < 0.6) {
          v.entry_iter = static_cast<long>(2 * k - 1);
          v.disk = (*center == Disk::Delta0) ? Disk::Delta1 : Disk::Delta0;
        }
      }
      return v;
    }
  }

  v.kind = OrbitKind::Unresolved;
  return v;
}

}  // namespace siegel
