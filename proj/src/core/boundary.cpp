#include "boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace siegel {

namespace {

// Uniform grid over a point cloud for nearest-neighbor queries.
class PointGrid {
 public:
  explicit PointGrid(const std::vector<cplx> &pts, int target_per_cell = 2)
      : pts_(pts) {
    xmin_ = ymin_ = 1e300;
    xmax_ = ymax_ = -1e300;
    for (const cplx &p : pts) {
      xmin_ = std::min(xmin_, p.real());
      xmax_ = std::max(xmax_, p.real());
      ymin_ = std::min(ymin_, p.imag());
      ymax_ = std::max(ymax_, p.imag());
    }
    const double w = std::max({xmax_ - xmin_, ymax_ - ymin_, 1e-30});
    side_ = std::max(1, static_cast<int>(std::sqrt(
                            static_cast<double>(pts.size()) /
                            std::max(1, target_per_cell))));
    cell_ = w / side_;
    cells_.resize(static_cast<size_t>(side_) * static_cast<size_t>(side_));
    for (size_t i = 0; i < pts.size(); ++i)
      cells_[index_of(pts[i])].push_back(static_cast<int>(i));
  }

  // Nearest distance from q to the cloud, optionally excluding index skip.
  double nearest(cplx q, int skip = -1) const {
    int cx, cy;
    clamp_cell(q, cx, cy);
    double best = 1e300;
    for (int ring = 0; ring < 2 * side_; ++ring) {
      bool any = false;
      for (int dy = -ring; dy <= ring; ++dy)
        for (int dx = -ring; dx <= ring; ++dx) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          const int gx = cx + dx, gy = cy + dy;
          if (gx < 0 || gy < 0 || gx >= side_ || gy >= side_) continue;
          any = true;
          for (int j : cells_[static_cast<size_t>(gy * side_ + gx)]) {
            if (j == skip) continue;
            best = std::min(best, std::abs(pts_[static_cast<size_t>(j)] - q));
          }
        }
      // A hit at ring r guarantees the true nearest lies within r+1 rings.
      if (best < 1e299 && best <= (ring - 1) * cell_) break;
      if (!any && ring >= side_) break;
    }
    return best;
  }

  double cell() const { return cell_; }

 private:
  size_t index_of(cplx p) const {
    int cx, cy;
    clamp_cell(p, cx, cy);
    return static_cast<size_t>(cy * side_ + cx);
  }
  void clamp_cell(cplx p, int &cx, int &cy) const {
    cx = std::min(side_ - 1,
                  std::max(0, static_cast<int>((p.real() - xmin_) / cell_)));
    cy = std::min(side_ - 1,
                  std::max(0, static_cast<int>((p.imag() - ymin_) / cell_)));
  }

  const std::vector<cplx> &pts_;
  double xmin_, xmax_, ymin_, ymax_, cell_;
  int side_;
  std::vector<std::vector<int>> cells_;
};

bool segments_cross(cplx p1, cplx p2, cplx p3, cplx p4) {
  auto cross = [](cplx u, cplx v) {
    return u.real() * v.imag() - u.imag() * v.real();
  };
  const double d1 = cross(p2 - p1, p3 - p1);
  const double d2 = cross(p2 - p1, p4 - p1);
  const double d3 = cross(p4 - p3, p1 - p3);
  const double d4 = cross(p4 - p3, p2 - p3);
  return d1 * d2 < 0.0 && d3 * d4 < 0.0;
}

// Grid of segment indices keyed by the cells a segment's bounding box
// touches; cell size is tied to the longest segment.
class SegmentGrid {
 public:
  SegmentGrid(const std::vector<cplx> &poly, bool closed)
      : poly_(poly), closed_(closed) {
    nseg_ = poly.size() - (closed ? 0 : 1);
    double maxlen = 1e-300;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (size_t i = 0; i < poly.size(); ++i) {
      xmin = std::min(xmin, poly[i].real());
      xmax = std::max(xmax, poly[i].real());
      ymin = std::min(ymin, poly[i].imag());
      ymax = std::max(ymax, poly[i].imag());
    }
    for (size_t i = 0; i < nseg_; ++i)
      maxlen = std::max(maxlen, std::abs(end(i) - start(i)));
    xmin_ = xmin;
    ymin_ = ymin;
    cell_ = maxlen * 1.001;
    nx_ = std::max(
        1, std::min(4096, static_cast<int>((xmax - xmin) / cell_) + 1));
    ny_ = std::max(
        1, std::min(4096, static_cast<int>((ymax - ymin) / cell_) + 1));
    cells_.resize(static_cast<size_t>(nx_) * static_cast<size_t>(ny_));
    for (size_t i = 0; i < nseg_; ++i) insert(i);
  }

  cplx start(size_t i) const { return poly_[i]; }
  cplx end(size_t i) const { return poly_[(i + 1) % poly_.size()]; }
  size_t segments() const { return nseg_; }

  template <typename Fn>
  void for_each_candidate_pair(Fn fn) const {
    for (const auto &cell : cells_)
      for (size_t a = 0; a < cell.size(); ++a)
        for (size_t b = a + 1; b < cell.size(); ++b)
          fn(static_cast<size_t>(cell[a]), static_cast<size_t>(cell[b]));
  }

  template <typename Fn>
  void for_each_in_box(cplx lo, cplx hi, Fn fn) const {
    int x0, y0, x1, y1;
    cell_of(lo, x0, y0);
    cell_of(hi, x1, y1);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x)
        for (int i : cells_[static_cast<size_t>(y * nx_ + x)])
          fn(static_cast<size_t>(i));
  }

 private:
  void cell_of(cplx p, int &cx, int &cy) const {
    cx = std::min(nx_ - 1,
                  std::max(0, static_cast<int>((p.real() - xmin_) / cell_)));
    cy = std::min(ny_ - 1,
                  std::max(0, static_cast<int>((p.imag() - ymin_) / cell_)));
  }
  void insert(size_t i) {
    const cplx a = start(i), b = end(i);
    int x0, y0, x1, y1;
    cell_of(cplx(std::min(a.real(), b.real()), std::min(a.imag(), b.imag())),
            x0, y0);
    cell_of(cplx(std::max(a.real(), b.real()), std::max(a.imag(), b.imag())),
            x1, y1);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x)
        cells_[static_cast<size_t>(y * nx_ + x)].push_back(
            static_cast<int>(i));
  }

  const std::vector<cplx> &poly_;
  bool closed_;
  size_t nseg_;
  double xmin_, ymin_, cell_;
  int nx_, ny_;
  std::vector<std::vector<int>> cells_;
};

}  // namespace

std::vector<cplx> SiegelBoundarySample::angle_sorted() const {
  std::vector<size_t> order(points.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    return internal_angles[i] < internal_angles[j];
  });
  std::vector<cplx> out;
  out.reserve(points.size());
  for (size_t i : order) out.push_back(points[i]);
  return out;
}

std::vector<cplx> f2_orbit(const Family &fam, cplx start, long n_points) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<size_t>(n_points));
  cplx z = start;
  for (long k = 0; k < n_points; ++k) {
    pts.push_back(z);
    z = fam.eval2(z);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(Status::Internal, "orbit blow-up while sampling a boundary");
  }
  return pts;
}

SiegelBoundarySample siegel_boundary(const Family &fam, Disk disk,
                                     long n_points, bool skip_verdict) {
  if (n_points < 8) fail(Status::InvalidArgument, "n_points must be >= 8");
  const cplx center = disk == Disk::Delta0 ? cplx(0.0) : cplx(1.0);

  // The sample is anchored at a critical point on the requested boundary;
  // when no critical point lies on it, the boundary is the f-image of the
  // partner boundary and the sample starts at the image of that anchor.
  std::optional<cplx> anchor = disk_anchor(fam, center);
  cplx start;
  cplx anchor_point;
  if (anchor) {
    start = *anchor;
    anchor_point = *anchor;
  } else {
    const cplx other_center = disk == Disk::Delta0 ? cplx(1.0) : cplx(0.0);
    const auto partner = disk_anchor(fam, other_center);
    if (!partner)
      fail(Status::NotOnBoundary, "no critical point anchors either boundary");
    start = fam.eval(*partner);
    anchor_point = start;
  }

  if (!skip_verdict) {
    const cplx vcrit = anchor ? *anchor : [&] {
      const cplx other_center = disk == Disk::Delta0 ? cplx(1.0) : cplx(0.0);
      return *disk_anchor(fam, other_center);
    }();
    OrbitBudget b;
    b.max_iter = std::max<long>(65536, 2 * n_points);
    const OrbitVerdict v = classify_orbit(fam, vcrit, b);
    if (v.kind != OrbitKind::BoundaryLike)
      fail(Status::NotOnBoundary,
           "anchoring critical orbit is not boundary-recurrent");
  }

  SiegelBoundarySample sample;
  sample.disk = disk;
  sample.anchor = anchor_point;
  sample.points = f2_orbit(fam, start, n_points);
  sample.internal_angles.reserve(static_cast<size_t>(n_points));
  const double theta = fam.theta().value;
  for (long k = 0; k < n_points; ++k)
    sample.internal_angles.push_back(frac(static_cast<double>(k) * theta));
  return sample;
}

RotationEstimate rotation_number_estimate(const std::vector<cplx> &points) {
  const size_t n = points.size();
  if (n < 16) fail(Status::InvalidArgument, "sample too small");

  cplx centroid = 0.0;
  for (const cplx &p : points) centroid += p;
  centroid /= static_cast<double>(n);

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<double> phi(n);
  for (size_t i = 0; i < n; ++i) {
    const cplx v = points[i] - centroid;
    if (std::abs(v) < 1e-300)
      fail(Status::DegenerateSample, "sample point coincides with centroid");
    phi[i] = std::arg(v);
  }
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return phi[i] < phi[j]; });
  std::vector<size_t> rank(n);
  for (size_t r = 0; r < n; ++r) rank[order[r]] = r;

  auto mean_advance = [&](size_t lo, size_t hi) {
    double acc = 0.0;
    for (size_t k = lo + 1; k < hi; ++k) {
      const long d = static_cast<long>(rank[k]) - static_cast<long>(rank[k - 1]);
      acc += static_cast<double>((d % static_cast<long>(n) +
                                  static_cast<long>(n)) %
                                 static_cast<long>(n));
    }
    return acc / (static_cast<double>(hi - lo - 1) * static_cast<double>(n));
  };

  RotationEstimate est;
  est.estimate = mean_advance(0, n);
  const double e1 = mean_advance(0, n / 2);
  const double e2 = mean_advance(n / 2, n);
  est.confidence = std::abs(e1 - e2) + 2.0 / static_cast<double>(n);
  if (std::abs(e1 - e2) > 0.05)
    fail(Status::DegenerateSample,
         "half-sample rotation estimates disagree; sample is not a closed "
         "invariant curve");
  return est;
}

ConformalAngle conformal_angle(const Family &fam, LocusCase which,
                               long n_sample) {
  if (n_sample < 1000) n_sample = 1000;
  const double theta = fam.theta().value;

  // Dynamical labels: anchor0 on the disk carrying the normalization.
  const Disk base_disk = which == LocusCase::Gamma1 ? Disk::Delta1
                                                    : Disk::Delta0;
  const cplx center = base_disk == Disk::Delta0 ? cplx(0.0) : cplx(1.0);
  const auto anchor = disk_anchor(fam, center);
  if (!anchor)
    fail(Status::NotOnBoundary, "no critical point on the required boundary");

  const cplx other = std::abs(*anchor - fam.crit0()) <
                             std::abs(*anchor - fam.crit1())
                         ? fam.crit1()
                         : fam.crit0();

  cplx target;
  switch (which) {
    case LocusCase::GammaCurve:
      target = fam.eval(other);
      break;
    case LocusCase::Gamma0:
    case LocusCase::Gamma1:
      target = other;
      break;
  }

  const std::vector<cplx> pts = f2_orbit(fam, *anchor, n_sample);
  double best = 1e300;
  long best_k = 0;
  double diam = 0.0;
  cplx mean = 0.0;
  for (const cplx &p : pts) mean += p;
  mean /= static_cast<double>(n_sample);
  for (long k = 0; k < n_sample; ++k) {
    const cplx p = pts[static_cast<size_t>(k)];
    diam = std::max(diam, 2.0 * std::abs(p - mean));
    const double d = std::abs(p - target);
    if (d < best) {
      best = d;
      best_k = k;
    }
  }

  // Angular resolution: nearest internal-angle gap achievable with this
  // sample length, plus a spatial consistency estimate.
  ConformalAngle out;
  out.matched_iterate = best_k;
  out.match_distance = best;
  out.radians = kTwoPi * frac(static_cast<double>(best_k) * theta);
  out.precision = kTwoPi * 4.0 / static_cast<double>(n_sample);

  // A genuine boundary target sits within the sample's own scale; a
  // target off the boundary misses by a disk-sized amount.
  if (best > 0.01 * diam)
    fail(Status::NoMatch, "no boundary point matches the target within the "
                          "sample resolution");
  return out;
}

double hausdorff_boundary_distance(const Family &f1, const Family &f2,
                                   Disk disk, long n_points) {
  const SiegelBoundarySample s1 = siegel_boundary(f1, disk, n_points, true);
  const SiegelBoundarySample s2 = siegel_boundary(f2, disk, n_points, true);
  return hausdorff_distance(s1.points, s2.points);
}

int polyline_winding(const std::vector<cplx> &poly, cplx around) {
  double acc = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const cplx u = poly[i] - around;
    const cplx v = poly[(i + 1) % n] - around;
    acc += std::arg(v / u);
  }
  return static_cast<int>(std::lround(acc / kTwoPi));
}

bool polyline_simple(const std::vector<cplx> &poly) {
  if (poly.size() < 4) return true;
  SegmentGrid grid(poly, true);
  const size_t n = grid.segments();
  bool ok = true;
  grid.for_each_candidate_pair([&](size_t i, size_t j) {
    if (!ok) return;
    const size_t lo = std::min(i, j), hi = std::max(i, j);
    if (hi - lo == 1 || (lo == 0 && hi == n - 1)) return;  // adjacent
    if (segments_cross(grid.start(i), grid.end(i), grid.start(j),
                       grid.end(j)))
      ok = false;
  });
  return ok;
}

bool polylines_disjoint(const std::vector<cplx> &a,
                        const std::vector<cplx> &b) {
  SegmentGrid ga(a, true);
  // For each segment of b, look up nearby segments of a via the box query.
  const size_t nb = b.size();
  for (size_t j = 0; j < nb; ++j) {
    const cplx p = b[j], q = b[(j + 1) % nb];
    const cplx lo(std::min(p.real(), q.real()), std::min(p.imag(), q.imag()));
    const cplx hi(std::max(p.real(), q.real()), std::max(p.imag(), q.imag()));
    bool crossed = false;
    ga.for_each_in_box(lo, hi, [&](size_t i) {
      if (crossed) return;
      if (segments_cross(ga.start(i), ga.end(i), p, q)) crossed = true;
    });
    if (crossed) return false;
  }
  return true;
}

double distance_to_polyline(cplx z, const std::vector<cplx> &poly,
                            bool closed) {
  const size_t n = poly.size();
  const size_t nseg = closed ? n : n - 1;
  double best = 1e300;
  for (size_t i = 0; i < nseg; ++i) {
    const cplx a = poly[i], b = poly[(i + 1) % n];
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0
                   ? ((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) /
                         len2
                   : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(z - (a + t * ab)));
  }
  return best;
}

double hausdorff_distance(const std::vector<cplx> &a,
                          const std::vector<cplx> &b) {
  PointGrid ga(a), gb(b);
  double d = 0.0;
  for (const cplx &p : a) d = std::max(d, gb.nearest(p));
  for (const cplx &p : b) d = std::max(d, ga.nearest(p));
  return d;
}

double median_nn_spacing_public(const std::vector<cplx> &pts) {
  if (pts.size() < 2) return 0.0;
  PointGrid g(pts);
  std::vector<double> nn;
  nn.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    nn.push_back(g.nearest(pts[i], static_cast<int>(i)));
  std::nth_element(nn.begin(), nn.begin() + static_cast<long>(nn.size() / 2),
                   nn.end());
  return nn[nn.size() / 2];
}

}  // namespace siegel
