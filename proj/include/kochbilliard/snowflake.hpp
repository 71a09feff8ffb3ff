#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kochbilliard/polygon.hpp"

namespace kb {

/// Construction levels above this are rejected (3 * 4^8 sides).
inline constexpr int kMaxSnowflakeLevel = 8;

/// The prefractal snowflake KS_n: unit generating triangle with its base on
/// the x-axis and lower-left vertex at the origin, each level replacing the
/// middle third of every side by the two outer sides of an equilateral bump.
struct PrefractalTable {
  int level = 0;
  ExactPolygon polygon;

  std::size_t sideCount() const { return polygon.size(); }
  VertexKind vertexKind(std::size_t i) const { return polygon.kind(i); }
  /// Side length 3^-level.
  Rational sideLength() const;
};

PrefractalTable buildKS(int level, int maxLevel = kMaxSnowflakeLevel);

/// The equilateral triangle KS_0 with unit sides.
const ExactPolygon& unitTriangle();

struct Segment {
  ExactVec a;
  ExactVec b;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Ghost g_{n,i}: the open middle third of side s_{n,i}.
struct GhostSet {
  int level = 0;
  std::vector<Segment> ghosts;  // endpoints excluded
};

GhostSet ghostSet(int level);

/// Cell C_{n,i}: closed equilateral triangle of side 3^-n standing on the
/// ghost g_{n-1,i} of KS_{n-1}.
struct Cell {
  int level = 0;
  std::size_t index = 0;
  std::array<ExactVec, 3> triangle;  // ghost start, ghost end, apex
  Segment ghost;
};

std::vector<Cell> cells(int level);

/// The part of KS_n's boundary lying on the boundary of the generating
/// triangle: 3 * 2^n closed segments of length 3^-n.
std::vector<Segment> intersectWithDelta(int level);

struct LatticeCoord {
  long i = 0;
  long j = 0;
  friend bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
};

/// A triangle of the tiling: up triangles have vertices (i,j),(i+1,j),(i,j+1);
/// down triangles (i+1,j),(i,j+1),(i+1,j+1).
struct LatticeTriangle {
  long i = 0;
  long j = 0;
  bool up = true;
};

/// KS_n inside the equilateral tiling of side 3^-n.
struct TilingEmbedding {
  int level = 0;
  std::array<ExactVec, 2> basis;
  std::vector<LatticeCoord> vertexCoords;
  std::vector<LatticeTriangle> triangles;  // filled only when requested
};

TilingEmbedding embedInTiling(const PrefractalTable& table, bool enumerateTriangles = true);

}  // namespace kb
