#pragma once

#include <array>
#include <optional>
#include <vector>

#include "kochbilliard/scalar.hpp"
#include "kochbilliard/snowflake.hpp"
#include "kochbilliard/unfolding.hpp"

namespace kb {

/// An initial condition of KS_n obtained from one on the triangle by sliding
/// the basepoint along its line to where the forward ray enters KS_n.
struct InducedCondition {
  int level = 0;
  InitialCondition<QSqrt3> condition;
  Locus locus;                  // boundary locus of the new basepoint
  bool startsAtVertex = false;  // the orbit is singular from the start
};

InducedCondition induceCondition(const PrefractalTable& table, const InitialCondition<QSqrt3>& source);

/// The orbit through the midpoint of every side at pi/3 to that side, and the
/// partition of the sides into distinct paths (same footprint cycle up to
/// rotation and reversal).
struct GammaEnumeration {
  int level = 0;
  std::vector<ExactOrbit> orbits;       // one per side
  std::vector<std::size_t> pathClass;   // per side, index into representatives
  std::vector<std::size_t> representatives;  // first side of each class
  std::size_t distinctPaths() const { return representatives.size(); }
};

GammaEnumeration enumerateGamma(const PrefractalTable& table, std::size_t maxEvents);

/// Launch condition of the gamma orbit on side i.
InitialCondition<QSqrt3> gammaCondition(const PrefractalTable& table, std::size_t side);

/// Sides whose midpoint lies on the boundary of the generating triangle.
std::vector<std::size_t> deltaSides(const PrefractalTable& table);

struct FagnanoCollection {
  int level = 0;
  std::vector<std::size_t> sides;
  std::vector<ExactOrbit> orbits;
  std::size_t distinctPaths = 0;
  QSqrt3 minLength;                     // over the collection
  std::optional<QSqrt3> minOtherLength; // over the rest of gamma_n
  bool shortestInGamma = false;         // measured, not assumed
};

FagnanoCollection fagnanoCollection(const PrefractalTable& table, std::size_t maxEvents);
FagnanoCollection fagnanoCollection(const PrefractalTable& table, const GammaEnumeration& gamma);

/// The Fagnano condition of the triangle: base midpoint, angle pi/3.
InitialCondition<QSqrt3> fagnanoSource();

/// Throws NotPeriodic if the induced orbit does not close within budget.
ExactOrbit ppfBySimulation(int n, std::size_t maxEvents);

/// x -> linear * x + translation, linear = ratio * orthogonal.
struct Similarity {
  Mat2 linear = Mat2::identity();
  ExactVec translation;

  static Similarity identity() { return {}; }
  ExactVec apply(const ExactVec& p) const { return linear * p + translation; }
  Similarity operator*(const Similarity& o) const { return {linear * o.linear, linear * o.translation + translation}; }
  Similarity inverse() const;
  /// Square of the contraction ratio.
  QSqrt3 ratio2() const { return abs(linear.det()); }
  friend bool operator==(const Similarity&, const Similarity&) = default;
};

/// W_i takes the triangle onto the outward cell on its side i, base onto the
/// ghost. Subsystem i is {W_i W_j W_i^-1 : j = 1, 2}; the cells of branch i
/// at depth k are its k-1 fold words applied to W_i.
struct IFSSystem {
  std::array<Similarity, 3> cellMaps;
  std::array<std::array<Similarity, 2>, 3> subsystems;
};

IFSSystem ppfIFS();

struct PPFConstruction {
  int level = 0;
  std::vector<ExactVec> footprint;  // chronological, one period
  std::vector<Segment> segments;    // consecutive footprint points, cyclic
};

PPFConstruction ppfByIFS(int n);

/// Footprint cycles agree up to rotation and reversal.
bool sameCycle(const std::vector<ExactVec>& a, const std::vector<ExactVec>& b);

enum class OrbitClass {
  Gamma,
  Fagnano,
  PrimaryPiecewiseFagnano,
  NonGammaPeriodic,
  SingularAcute,
  SingularObtuse,
  Quasiperiodic,
};
const char* name(OrbitClass c);

/// First match wins: obtuse singularity (including an obtuse basepoint),
/// acute singularity, ppF_n, member of the Fagnano collection, other gamma
/// orbit, other periodic, and Exhausted as quasiperiodic.
OrbitClass classifyOrbit(const PrefractalTable& table, const ExactOrbit& orbit);

struct CompatibleSequence {
  InitialCondition<QSqrt3> source;
  std::vector<InducedCondition> induced;
  std::vector<ExactOrbit> orbits;
  std::vector<OrbitClass> labels;
};

CompatibleSequence compatibleSequence(const InitialCondition<QSqrt3>& source, int nMax, std::size_t maxEvents);

/// k such that the orbit is the Fagnano orbit traversed 2k+1 times.
std::optional<long> oddPeriodCheck(const ExactOrbit& orbit);

/// Hausdorff distance between the footprint of ppF_n and the level-n
/// middle-third Cantor endpoints, each Cantor interval carried onto the KS_n
/// side with the same branch address. Computed at 200 bits.
Real footprintVsCantor(int n);

}  // namespace kb
