#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace siegel {

enum class LabelFamily { U, V, W, X };
enum class LabelRegime { CurveCluster, ArcCluster };
enum class Cluster { C0, C1 };
enum class ChainColor { Red, Green, Purple };
enum class Connecting { Symmetric, Asymmetric, AsymmetricConjugate };
enum class RelabelKind { Swap12Curve, Swap01ArcAtDepth };

// Symbolic address of an eventually-Siegel-disk Fatou component.  The
// base disk is family U with empty index lists; U with lower (0) and
// upper (t) encodes the first-pullback components U_0^t.  The first index
// pair is the deepest pullback step: f^2 strips it (or decrements s1).
struct LabelWord {
  LabelFamily family = LabelFamily::U;
  std::vector<int> lower;  // s_1..s_m, s_i >= 0 (0 only in U_0^t)
  std::vector<int> upper;  // t_1..t_m
  LabelRegime regime = LabelRegime::CurveCluster;
  Cluster cluster = Cluster::C0;

  bool is_base() const { return lower.empty(); }
  int pullback_depth() const;
  bool operator==(const LabelWord &o) const {
    return family == o.family && lower == o.lower && upper == o.upper &&
           regime == o.regime && cluster == o.cluster;
  }

  std::string str() const;
  static LabelWord parse(const std::string &s, LabelRegime regime);
};

void validate(const LabelWord &w);

// The displayed f^2 rule with the base identifications V() = U_0^0,
// W() = U_0^1, X() = U_0^2 and U_0^t -> U.
LabelWord apply_f2(const LabelWord &w);

// Convergent Fatou chain as printed: red on the curve cluster interleaves
// its two lineages (two words per pullback depth).  degenerate_m = -1
// means the non-degenerate chain; m >= 0 removes the 0-terminated lineage
// from depth m+1 on (the labels of green and purple chains are unchanged
// by degeneration).
class FatouChain {
 public:
  FatouChain(ChainColor color, Cluster cluster, LabelRegime regime,
             int degenerate_m = -1);

  LabelWord word(int k) const;
  ChainColor color() const { return color_; }
  LabelRegime regime() const { return regime_; }
  Cluster cluster() const { return cluster_; }
  int degenerate_m() const { return degenerate_m_; }

 private:
  ChainColor color_;
  Cluster cluster_;
  LabelRegime regime_;
  int degenerate_m_;
};

// (color on C0, color on C1) of the chain pair converging to P3.
std::pair<ChainColor, ChainColor> chain_pairing(Connecting c);

// Label-swap involutions: Swap12Curve switches the roles of U_0^1 and
// U_0^2 (uppers 1 <-> 2 and families W <-> X); the arc swap at depth m
// switches U_m^1 with V_m^1 and their attachment subtrees.
LabelWord relabel(const LabelWord &w, RelabelKind kind, int m = 0);

// ------------------------------------------------------- ray partition

struct Angle {
  std::int64_t num = 0, den = 1;  // reduced, in [0,1)
  bool operator==(const Angle &o) const {
    return num == o.num && den == o.den;
  }
  bool operator<(const Angle &o) const { return value() < o.value(); }
  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  Angle tripled() const;
  std::string str() const;
  static Angle parse(const std::string &s);
};

struct AnglePair {
  Angle a, b;  // co-landing rays, a < b
};

// Co-landing pairs of the partition lamination to the given pullback
// depth: depth 0 holds only the seed pair ({1/4,3/4} for the curve
// regime, {1/8,3/8} for the arc regime).
std::vector<AnglePair> partition_pairs(LabelRegime regime, int depth);

// All ray angles of the partition to the given depth.
std::vector<Angle> partition_angles(LabelRegime regime, int depth);

// Number of complementary regions of the depth-d partition.
int partition_region_count(LabelRegime regime, int depth);

// Canonical address of the complementary region bounded by exactly the
// given rays, e.g. "^{1/12}_{1/4}Omega^{3/4}_{11/12}"; the region whose
// angular footprint contains 1/2 prints as plain "Omega".
std::string cluster_address(const std::vector<Angle> &angles,
                            LabelRegime regime, int depth);

}  // namespace siegel
