#include "labels.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace siegel {

namespace {

char family_char(LabelFamily f) {
  switch (f) {
    case LabelFamily::U: return 'U';
    case LabelFamily::V: return 'V';
    case LabelFamily::W: return 'W';
    case LabelFamily::X: return 'X';
  }
  return '?';
}

LabelFamily family_of(char c) {
  switch (c) {
    case 'U': return LabelFamily::U;
    case 'V': return LabelFamily::V;
    case 'W': return LabelFamily::W;
    case 'X': return LabelFamily::X;
  }
  fail(Status::IllegalLabel, std::string("unknown family letter '") + c + "'");
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

int LabelWord::pullback_depth() const {
  if (lower.empty()) return 0;
  return std::accumulate(lower.begin(), lower.end(), 0) + 1;
}

std::string LabelWord::str() const {
  std::ostringstream os;
  if (cluster == Cluster::C1) os << '~';
  os << family_char(family);
  if (!lower.empty()) {
    os << '_';
    for (size_t i = 0; i < lower.size(); ++i)
      os << (i ? "," : "") << lower[i];
    os << '^';
    for (size_t i = 0; i < upper.size(); ++i)
      os << (i ? "," : "") << upper[i];
  }
  return os.str();
}

LabelWord LabelWord::parse(const std::string &s, LabelRegime regime) {
  LabelWord w;
  w.regime = regime;
  size_t i = 0;
  if (i < s.size() && s[i] == '~') {
    w.cluster = Cluster::C1;
    ++i;
  }
  if (i >= s.size()) fail(Status::IllegalLabel, "empty label");
  w.family = family_of(s[i++]);
  if (i == s.size()) {
    validate(w);
    return w;
  }
  if (s[i] != '_') fail(Status::IllegalLabel, "expected '_' in " + s);
  ++i;
  auto read_list = [&](char stop) {
    std::vector<int> out;
    std::string cur;
    for (; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == stop || s[i] == ',') {
        if (cur.empty()) fail(Status::IllegalLabel, "bad index list in " + s);
        out.push_back(std::stoi(cur));
        cur.clear();
        if (i == s.size() || s[i] == stop) break;
      } else if (s[i] >= '0' && s[i] <= '9') {
        cur += s[i];
      } else {
        fail(Status::IllegalLabel, "bad character in " + s);
      }
    }
    return out;
  };
  w.lower = read_list('^');
  if (i >= s.size() || s[i] != '^')
    fail(Status::IllegalLabel, "expected '^' in " + s);
  ++i;
  w.upper = read_list('\0');
  validate(w);
  return w;
}

void validate(const LabelWord &w) {
  if (w.lower.size() != w.upper.size())
    fail(Status::IllegalLabel, "index lists differ in length: " + w.str());
  const int tmax = w.regime == LabelRegime::CurveCluster ? 2 : 1;
  for (int t : w.upper)
    if (t < 0 || t > tmax)
      fail(Status::IllegalLabel, "upper index out of range: " + w.str());
  if (w.regime == LabelRegime::ArcCluster && w.family == LabelFamily::X)
    fail(Status::IllegalLabel, "family X does not occur in the arc regime");
  if (w.lower.empty()) {
    if (w.family != LabelFamily::U)
      fail(Status::IllegalLabel, "only U may carry empty indices: " + w.str());
    return;
  }
  for (size_t i = 0; i < w.lower.size(); ++i) {
    const int s = w.lower[i];
    if (s < 0 || (s == 0 && !(w.family == LabelFamily::U &&
                              w.lower.size() == 1)))
      fail(Status::IllegalLabel, "lower index must be >= 1: " + w.str());
  }
}

LabelWord apply_f2(const LabelWord &w) {
  validate(w);
  if (w.is_base())
    fail(Status::IllegalLabel, "the base disk U has no forward image label");

  LabelWord out = w;
  // First-pullback components map straight back to the disk.
  if (w.family == LabelFamily::U && w.lower.size() == 1 && w.lower[0] == 0) {
    out.family = LabelFamily::U;
    out.lower.clear();
    out.upper.clear();
    return out;
  }

  if (w.lower[0] >= 2) {
    out.family = LabelFamily::U;
    out.lower[0] -= 1;
    return out;
  }

  // s1 == 1: strip the first pair; the new family records t1.
  const int t1 = w.upper[0];
  out.lower.erase(out.lower.begin());
  out.upper.erase(out.upper.begin());
  switch (t1) {
    case 0: out.family = LabelFamily::V; break;
    case 1: out.family = LabelFamily::W; break;
    case 2: out.family = LabelFamily::X; break;
    default: fail(Status::IllegalLabel, "bad upper index");
  }
  if (out.lower.empty()) {
    // Base identifications V() = U_0^0, W() = U_0^1, X() = U_0^2.
    out.lower = {0};
    out.upper = {t1};
    out.family = LabelFamily::U;
  }
  return out;
}

FatouChain::FatouChain(ChainColor color, Cluster cluster, LabelRegime regime,
                       int degenerate_m)
    : color_(color), cluster_(cluster), regime_(regime),
      degenerate_m_(degenerate_m) {
  if (regime == LabelRegime::ArcCluster && color == ChainColor::Purple)
    fail(Status::IllegalChain, "the arc regime has only red and green chains");
  if (degenerate_m < -1)
    fail(Status::IllegalChain, "degenerate_m must be -1 (none) or >= 0");
}

LabelWord FatouChain::word(int k) const {
  if (k < 0) fail(Status::InvalidArgument, "chain index must be >= 0");
  LabelWord w;
  w.regime = regime_;
  w.cluster = cluster_;
  if (k == 0) return w;  // the Siegel disk

  auto first_pullback = [&](int t) {
    LabelWord u;
    u.regime = regime_;
    u.cluster = cluster_;
    u.lower = {0};
    u.upper = {t};
    return u;
  };
  auto lineage = [&](LabelFamily fam, int depth, int last_t,
                     int repeated_t) {
    // depth >= 2: family word with (depth-1) lower 1s and uppers
    // repeated_t,...,repeated_t,last_t.
    LabelWord u;
    u.regime = regime_;
    u.cluster = cluster_;
    u.family = fam;
    u.lower.assign(static_cast<size_t>(depth - 1), 1);
    u.upper.assign(static_cast<size_t>(depth - 1), repeated_t);
    u.upper.back() = last_t;
    return u;
  };

  if (regime_ == LabelRegime::CurveCluster) {
    switch (color_) {
      case ChainColor::Green:
        return k == 1 ? first_pullback(0)
                      : lineage(LabelFamily::V, k, 0, 0);
      case ChainColor::Purple:
        return k == 1 ? first_pullback(1)
                      : lineage(LabelFamily::W, k, 1, 1);
      case ChainColor::Red: {
        if (degenerate_m_ == 0) {
          // 0-lineage removed entirely.
          return k == 1 ? first_pullback(2)
                        : lineage(LabelFamily::X, k, 2, 2);
        }
        // Interleaved lineages: per depth d the 0-terminated word comes
        // first, then the 2-terminated one.  For degenerate_m >= 1 the
        // 0-lineage stops after depth m.
        const int m = degenerate_m_;
        if (m < 0 || k <= 2 * m) {
          const int d = (k + 1) / 2;
          const bool zero_variant = (k % 2) == 1;
          if (d == 1)
            return first_pullback(zero_variant ? 0 : 2);
          return lineage(LabelFamily::X, d, zero_variant ? 0 : 2, 2);
        }
        const int d = k - m;
        return d == 1 ? first_pullback(2) : lineage(LabelFamily::X, d, 2, 2);
      }
    }
  } else {
    switch (color_) {
      case ChainColor::Red:
        return k == 1 ? first_pullback(0)
                      : lineage(LabelFamily::V, k, 0, 0);
      case ChainColor::Green:
        return k == 1 ? first_pullback(1)
                      : lineage(LabelFamily::W, k, 1, 1);
      case ChainColor::Purple:
        fail(Status::IllegalChain, "unreachable");
    }
  }
  fail(Status::Internal, "unhandled chain case");
}

std::pair<ChainColor, ChainColor> chain_pairing(Connecting c) {
  switch (c) {
    case Connecting::Symmetric:
      return {ChainColor::Red, ChainColor::Red};
    case Connecting::Asymmetric:
      return {ChainColor::Green, ChainColor::Purple};
    case Connecting::AsymmetricConjugate:
      return {ChainColor::Purple, ChainColor::Green};
  }
  fail(Status::Internal, "unhandled connecting case");
}

LabelWord relabel(const LabelWord &w, RelabelKind kind, int m) {
  validate(w);
  LabelWord out = w;
  if (kind == RelabelKind::Swap12Curve) {
    if (w.regime != LabelRegime::CurveCluster)
      fail(Status::IllegalLabel, "Swap12Curve needs the curve regime");
    for (int &t : out.upper) {
      if (t == 1) t = 2;
      else if (t == 2) t = 1;
    }
    if (out.family == LabelFamily::W) out.family = LabelFamily::X;
    else if (out.family == LabelFamily::X) out.family = LabelFamily::W;
    return out;
  }
  // Swap01ArcAtDepth: exchange U_m^1 with V_m^1 and their attachment
  // subtrees (words whose trailing pair is (m,1) with family U or V).
  if (w.regime != LabelRegime::ArcCluster)
    fail(Status::IllegalLabel, "the depth swap needs the arc regime");
  if (m < 1) fail(Status::IllegalLabel, "swap depth m must be >= 1");
  if (!out.lower.empty() && out.lower.back() == m && out.upper.back() == 1) {
    if (out.family == LabelFamily::U) out.family = LabelFamily::V;
    else if (out.family == LabelFamily::V) out.family = LabelFamily::U;
  }
  return out;
}

// ---------------------------------------------------------- ray partition

Angle Angle::tripled() const {
  Angle t;
  t.num = (3 * num) % den;
  t.den = den;
  const std::int64_t g = gcd64(t.num == 0 ? t.den : t.num, t.den);
  t.num /= g;
  t.den /= g;
  return t;
}

std::string Angle::str() const {
  if (num == 0) return "0";
  std::ostringstream os;
  os << num << '/' << den;
  return os.str();
}

Angle Angle::parse(const std::string &s) {
  Angle a;
  const size_t slash = s.find('/');
  if (slash == std::string::npos) {
    a.num = std::stoll(s);
    a.den = 1;
  } else {
    a.num = std::stoll(s.substr(0, slash));
    a.den = std::stoll(s.substr(slash + 1));
  }
  if (a.den <= 0) fail(Status::UnknownAngle, "bad angle " + s);
  a.num = ((a.num % a.den) + a.den) % a.den;
  const std::int64_t g = gcd64(a.num == 0 ? a.den : a.num, a.den);
  a.num /= g;
  a.den /= g;
  return a;
}

namespace {

Angle make_angle(std::int64_t n, std::int64_t d) {
  Angle a;
  a.num = ((n % d) + d) % d;
  a.den = d;
  const std::int64_t g = gcd64(a.num == 0 ? a.den : a.num, a.den);
  a.num /= g;
  a.den /= g;
  return a;
}

// Open arc (a -> b counterclockwise) containing x?
bool arc_contains(const Angle &a, const Angle &b, const Angle &x) {
  const double va = a.value(), vb = b.value(), vx = x.value();
  if (va < vb) return vx > va && vx < vb;
  return vx > va || vx < vb;
}

bool chords_cross(const AnglePair &p, const AnglePair &q) {
  if (p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b) return false;
  return arc_contains(p.a, p.b, q.a) != arc_contains(p.a, p.b, q.b);
}

AnglePair ordered_pair(Angle x, Angle y) {
  AnglePair p;
  if (y < x) std::swap(x, y);
  p.a = x;
  p.b = y;
  return p;
}

bool same_pair(const AnglePair &p, const AnglePair &q) {
  return p.a == q.a && p.b == q.b;
}

}  // namespace

std::vector<AnglePair> partition_pairs(LabelRegime regime, int depth) {
  if (depth < 0) fail(Status::InvalidArgument, "depth must be >= 0");
  if (depth > 8) fail(Status::InvalidArgument, "partition depth capped at 8");
  const AnglePair seed =
      regime == LabelRegime::CurveCluster
          ? ordered_pair(make_angle(1, 4), make_angle(3, 4))
          : ordered_pair(make_angle(1, 8), make_angle(3, 8));
  std::vector<AnglePair> all = {seed};
  std::vector<AnglePair> frontier = {seed};

  for (int level = 1; level <= depth; ++level) {
    std::vector<AnglePair> next;
    for (const AnglePair &L : frontier) {
      std::vector<Angle> pre;
      for (const Angle &e : {L.a, L.b})
        for (std::int64_t j = 0; j < 3; ++j)
          pre.push_back(make_angle(e.num + j * e.den, 3 * e.den));
      std::sort(pre.begin(), pre.end());

      std::vector<AnglePair> persisted;
      std::vector<Angle> remaining = pre;
      const bool self = (L.a.tripled() == L.b) && (L.b.tripled() == L.a);
      if (self) {
        // The invariant pair is one of its own preimage chords.
        persisted.push_back(L);
        remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                       [&](const Angle &x) {
                                         return x == L.a || x == L.b;
                                       }),
                        remaining.end());
      }
      // Preimage points alternate between preimages of the two endpoints;
      // the co-landing pairs form one of the two adjacent matchings.  The
      // valid one neither crosses the lamination built so far nor strictly
      // nests the invariant seed.
      auto try_matching = [&](size_t offset) -> std::vector<AnglePair> {
        std::vector<AnglePair> cand;
        for (size_t i = 0; i < remaining.size(); i += 2) {
          const size_t ia = (i + offset) % remaining.size();
          const size_t ib = (i + 1 + offset) % remaining.size();
          cand.push_back(ordered_pair(remaining[ia], remaining[ib]));
        }
        for (size_t i = 0; i < cand.size(); ++i) {
          for (const AnglePair &q : all)
            if (chords_cross(cand[i], q)) return {};
          for (size_t j = i + 1; j < cand.size(); ++j)
            if (chords_cross(cand[i], cand[j])) return {};
          if (self && arc_contains(cand[i].a, cand[i].b, seed.a) &&
              arc_contains(cand[i].a, cand[i].b, seed.b))
            return {};
        }
        return cand;
      };
      std::vector<AnglePair> pick;
      if (!remaining.empty()) {
        pick = try_matching(1);
        if (pick.empty()) pick = try_matching(0);
        if (pick.empty())
          fail(Status::Internal, "lamination pullback has no valid matching");
      }
      for (const AnglePair &p : persisted) {
        if (self) next.push_back(p);
      }
      for (const AnglePair &p : pick) {
        bool known = false;
        for (const AnglePair &q : all)
          if (same_pair(p, q)) known = true;
        if (!known) {
          all.push_back(p);
          next.push_back(p);
        }
      }
    }
    std::vector<AnglePair> dedup;
    for (const AnglePair &p : next) {
      bool seen = false;
      for (const AnglePair &q : dedup)
        if (same_pair(p, q)) seen = true;
      if (!seen) dedup.push_back(p);
    }
    frontier = dedup;
  }
  return all;
}

std::vector<Angle> partition_angles(LabelRegime regime, int depth) {
  std::vector<Angle> out;
  for (const AnglePair &p : partition_pairs(regime, depth)) {
    out.push_back(p.a);
    out.push_back(p.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int partition_region_count(LabelRegime regime, int depth) {
  // Non-crossing chords: every chord adds one region.
  return static_cast<int>(partition_pairs(regime, depth).size()) + 1;
}

std::string cluster_address(const std::vector<Angle> &angles,
                            LabelRegime regime, int depth) {
  if (angles.empty()) fail(Status::UnknownAngle, "no angles given");
  const std::vector<AnglePair> pairs = partition_pairs(regime, depth);
  const std::vector<Angle> all_angles = partition_angles(regime, depth);

  std::vector<Angle> sorted = angles;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<AnglePair> used;
  for (const Angle &a : sorted) {
    const AnglePair *owner = nullptr;
    for (const AnglePair &p : pairs)
      if (p.a == a || p.b == a) owner = &p;
    if (!owner)
      fail(Status::UnknownAngle, "angle " + a.str() + " is not in the depth-" +
                                     std::to_string(depth) + " partition");
    const Angle partner = owner->a == a ? owner->b : owner->a;
    if (!std::binary_search(sorted.begin(), sorted.end(), partner))
      fail(Status::UnknownAngle, "angle " + a.str() +
                                     " arrived without its co-landing "
                                     "partner " +
                                     partner.str());
    bool seen = false;
    for (const AnglePair &p : used)
      if (same_pair(p, *owner)) seen = true;
    if (!seen) used.push_back(*owner);
  }

  // Faces of the full partition: group the gaps between consecutive
  // partition angles by their side signature with respect to all chords.
  const size_t ng = all_angles.size();
  struct Gap {
    Angle start, end;
    std::vector<bool> sig;
  };
  std::vector<Gap> gaps(ng);
  for (size_t i = 0; i < ng; ++i) {
    gaps[i].start = all_angles[i];
    gaps[i].end = all_angles[(i + 1) % ng];
    // Exact rational midpoint of the gap (wrapping once past 1).
    const Angle &A = gaps[i].start;
    const Angle &B = gaps[i].end;
    std::int64_t nn = A.num * B.den + B.num * A.den;
    if (i + 1 == ng) nn += 2 * A.den * B.den;
    const Angle mid = make_angle(nn, 2 * A.den * B.den);
    gaps[i].sig.reserve(pairs.size());
    for (const AnglePair &p : pairs)
      gaps[i].sig.push_back(arc_contains(p.a, p.b, mid));
  }

  // Candidate faces = signature classes; face boundary chords = chords
  // having an endpoint on one of the face's gap boundaries.
  std::vector<std::vector<size_t>> faces;
  std::vector<std::vector<bool>> sigs;
  for (size_t i = 0; i < ng; ++i) {
    bool placed = false;
    for (size_t fidx = 0; fidx < sigs.size(); ++fidx)
      if (sigs[fidx] == gaps[i].sig) {
        faces[fidx].push_back(i);
        placed = true;
        break;
      }
    if (!placed) {
      sigs.push_back(gaps[i].sig);
      faces.push_back({i});
    }
  }

  auto face_chords = [&](const std::vector<size_t> &face) {
    std::vector<AnglePair> out;
    for (size_t gi : face)
      for (const Angle &endp : {gaps[gi].start, gaps[gi].end})
        for (const AnglePair &p : pairs)
          if (p.a == endp || p.b == endp) {
            bool seen = false;
            for (const AnglePair &q : out)
              if (same_pair(p, q)) seen = true;
            if (!seen) out.push_back(p);
          }
    return out;
  };

  auto chords_equal_used = [&](std::vector<AnglePair> cs) {
    if (cs.size() != used.size()) return false;
    for (const AnglePair &p : cs) {
      bool seen = false;
      for (const AnglePair &q : used)
        if (same_pair(p, q)) seen = true;
      if (!seen) return false;
    }
    return true;
  };

  std::vector<size_t> matches;
  for (size_t fidx = 0; fidx < faces.size(); ++fidx)
    if (chords_equal_used(face_chords(faces[fidx]))) matches.push_back(fidx);
  if (matches.empty())
    fail(Status::UnknownAngle, "the given rays do not bound a single region");

  // Both sides of the depth-0 seed chord share the same boundary set; the
  // side containing angle 1/2 is the plain Omega of the labelling scheme
  // and wins the tie.
  const Angle half = make_angle(1, 2);
  auto face_has_half = [&](size_t fidx) {
    for (size_t gi : faces[fidx])
      if (arc_contains(gaps[gi].start, gaps[gi].end, half) ||
          gaps[gi].start == half)
        return true;
    return false;
  };
  size_t chosen = matches[0];
  if (matches.size() == 2) {
    chosen = face_has_half(matches[0]) ? matches[0] : matches[1];
  } else if (matches.size() > 2) {
    fail(Status::UnknownAngle, "ambiguous region for the given rays");
  }
  if (depth == 0 && same_pair(used[0], pairs[0]) && used.size() == 1 &&
      face_has_half(chosen))
    return "Omega";

  // Merge the face's gaps into maximal arcs.
  std::vector<size_t> face = faces[chosen];
  std::sort(face.begin(), face.end());
  std::vector<std::pair<Angle, Angle>> arcs;
  for (size_t gi : face) {
    if (!arcs.empty() && arcs.back().second == gaps[gi].start)
      arcs.back().second = gaps[gi].end;
    else
      arcs.emplace_back(gaps[gi].start, gaps[gi].end);
  }
  if (arcs.size() > 1 && arcs.back().second == arcs.front().first) {
    arcs.front().first = arcs.back().first;
    arcs.pop_back();
  }

  std::ostringstream os;
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (i == 1) os << "Omega";
    os << "^{" << arcs[i].first.str() << "}_{" << arcs[i].second.str()
       << "}";
  }
  if (arcs.size() == 1) os << "Omega";
  return os.str();
}

}  // namespace siegel
