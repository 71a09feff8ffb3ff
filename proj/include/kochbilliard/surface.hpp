#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kochbilliard/billiard.hpp"
#include "kochbilliard/isometry.hpp"

namespace kb {

/// Interior angles pi * m_j / n_j of a rational polygon, in vertex order, and
/// N = lcm(n_j).
struct RationalAngleSpec {
  std::vector<RationalAngle> angles;
  long N = 1;

  /// Reduces each angle and checks that they sum to (r - 2) pi.
  static RationalAngleSpec from(std::vector<RationalAngle> angles);
};

/// Element of the dihedral group D_N acting on directions:
/// theta -> s * theta + 2 pi k / N.
struct DihedralElement {
  long k = 0;
  int s = 1;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

struct ConePoint {
  std::size_t sourceVertex = 0;
  long m = 1;  // cone angle 2 pi m
  bool removable = true;
  long multiplicity = 1;  // cone points on the surface coming from this vertex
};

struct SurfaceEdge {
  std::size_t copy = 0;
  std::size_t side = 0;
  friend bool operator==(const SurfaceEdge&, const SurfaceEdge&) = default;
};

/// The translation surface of a rational polygon as a combinatorial complex:
/// 2N copies of the polygon (one per element of D_N), side i of copy g glued
/// to side i of copy g * rho_i, where rho_i is the reflection in side i.
struct FlatSurfaceModel {
  RationalAngleSpec spec;
  std::vector<long> sideAngleIndex;  // direction of side i, in units of pi / N
  std::vector<DihedralElement> copies;
  std::vector<std::pair<SurfaceEdge, SurfaceEdge>> identifications;
  /// cornerClass[copy * r + vertex]: the surface point the corner lands on.
  std::vector<std::size_t> cornerClass;
  std::vector<std::size_t> classVertex;
  std::vector<ConePoint> conePoints;
  long vertexCount = 0, edgeCount = 0, faceCount = 0;
  long eulerCharacteristic = 0;
  long genus = 0;
  /// Corners of the generalized polygon obtained by reflecting around a
  /// vertex of angle pi / N; absent if no vertex has that angle.
  std::optional<std::size_t> generalizedPolygonCorners;

  // Present when built from an exact polygon; needed for the flow.
  std::optional<ExactPolygon> polygon;
  std::vector<Mat2> copyMatrices;
  ExactVec referenceVector;
  std::vector<ExactVec> copyOrientations;

  std::size_t copyCount() const { return copies.size(); }
  std::size_t sideCount() const { return spec.angles.size(); }
  std::size_t copyIndex(const DihedralElement& g) const { return static_cast<std::size_t>(g.k + (g.s < 0 ? spec.N : 0)); }
  DihedralElement compose(const DihedralElement& a, const DihedralElement& b) const;
  DihedralElement sideReflection(std::size_t side) const;
  /// The copy reached by crossing `side` out of `copy`.
  std::size_t gluedCopy(std::size_t copy, std::size_t side) const;
};

FlatSurfaceModel buildSurface(const RationalAngleSpec& spec);
/// Derives the angles from the side directions (NonRationalPolygon if a side
/// is not at a multiple of 15 degrees) and adds exact copy matrices.
FlatSurfaceModel buildSurface(const ExactPolygon& polygon);

/// Cone angle 2 pi m_j at the vertex, and whether it is removable (m_j = 1).
std::pair<long, bool> coneAngle(const RationalAngleSpec& spec, std::size_t vertexId);

struct FlowStart {
  std::size_t copy = 0;
  ExactVec point;      // polygon coordinates, in the closed polygon
  ExactVec direction;  // unit, polygon coordinates of that copy
};

enum class CrossingKind { Edge, RemovableCone, NonremovableCone };

struct SurfaceCrossing {
  CrossingKind kind = CrossingKind::Edge;
  std::size_t fromCopy = 0;
  std::size_t toCopy = 0;
  std::size_t id = 0;  // side id for edges, vertex id for cones
  ExactVec point;      // polygon coordinates
  ExactVec developedPoint;
  QSqrt3 cumulativeLength;
};

/// A straight path on the surface, also laid out as a straight line in the
/// plane by chaining the copy placements.
struct SurfacePath {
  FlowStart start;
  ExactVec developedDirection;
  std::vector<SurfaceCrossing> crossings;
  bool closed = false;             // returned to the start state
  bool stoppedAtCone = false;      // ended on a nonremovable cone point
  QSqrt3 length;
};

/// Straight-line flow: crosses glued edges, passes through removable cone
/// points, stops at nonremovable ones, at the crossing budget, or when the
/// start state recurs. Requires a surface built from an exact polygon.
SurfacePath straightLineFlow(const FlatSurfaceModel& surface, const FlowStart& start, std::size_t maxCrossings);

/// Folds the path back into the polygon as a billiard orbit record, ending at
/// the first recurrence of the billiard state (which can come before the
/// surface path closes, e.g. after an odd number of reflections).
ExactOrbit projectToBilliard(const FlatSurfaceModel& surface, const SurfacePath& path);

}  // namespace kb
