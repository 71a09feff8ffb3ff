#pragma once

#include <cstddef>
#include <vector>

#include "kochbilliard/geometry.hpp"

namespace kb {

/// Interior angle pi * m / n with gcd(m, n) = 1.
struct RationalAngle {
  long m = 1;
  long n = 1;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

RationalAngle makeAngle(long m, long n);

/// Acute: removable corner (interior angle pi/k, cone angle 2 pi); the flow
/// continues through it. Obtuse: nonremovable corner; the flow stops there.
/// On KS_n these are exactly the pi/3 and 4pi/3 vertices.
enum class VertexKind { Acute, Obtuse };

inline VertexKind kindOf(const RationalAngle& a) { return a.m == 1 ? VertexKind::Acute : VertexKind::Obtuse; }
const char* name(VertexKind k);

/// Positively oriented simple polygon. Side i runs from vertex i to vertex
/// i + 1; vertex i sits between side i - 1 and side i.
template <class S>
class Polygon {
 public:
  Polygon() = default;
  Polygon(std::vector<Point2<S>> vertices, std::vector<RationalAngle> angles);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2<S>>& vertices() const { return vertices_; }
  const Point2<S>& vertex(std::size_t i) const { return vertices_[i % size()]; }
  const Point2<S>& sideStart(std::size_t i) const { return vertex(i); }
  const Point2<S>& sideEnd(std::size_t i) const { return vertex(i + 1); }
  Vec2<S> sideDirection(std::size_t i) const { return sideEnd(i) - sideStart(i); }
  /// Outward normal (not normalized); the interior is to the left of each side.
  Vec2<S> outwardNormal(std::size_t i) const {
    Vec2<S> d = sideDirection(i);
    return {d.y, -d.x};
  }
  std::size_t prevSide(std::size_t vertexId) const { return (vertexId + size() - 1) % size(); }

  const RationalAngle& angle(std::size_t i) const { return angles_[i % size()]; }
  const std::vector<RationalAngle>& angles() const { return angles_; }
  VertexKind kind(std::size_t i) const { return kindOf(angle(i)); }

  /// Double-precision copies of the vertices, used only to prune candidate
  /// sides before exact intersection tests.
  const std::vector<double>& approxXs() const { return xs_; }
  const std::vector<double>& approxYs() const { return ys_; }

 private:
  std::vector<Point2<S>> vertices_;
  std::vector<RationalAngle> angles_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

using ExactPolygon = Polygon<QSqrt3>;
using ApproxPolygon = Polygon<Real>;

/// Builds an exact polygon, deriving each interior angle from the side
/// directions. Throws NonRationalPolygon if a side direction is not a multiple
/// of 15 degrees (the only rational angles available in Q(sqrt3)), and
/// InvalidArgument if the vertex cycle is not positively oriented.
ExactPolygon makeExactPolygon(std::vector<ExactVec> vertices);

/// Converts at the current Real precision.
ApproxPolygon toApprox(const ExactPolygon& p);

template <class S>
S signedArea(const Polygon<S>& p) {
  S twice(0);
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p.vertex(i), p.vertex(i + 1));
  return twice / S(2);
}

/// Exact O(n^2) simplicity check (no two non-adjacent sides meet, adjacent
/// sides meet only at their shared vertex).
bool isSimple(const ExactPolygon& p);

/// Strict interior test by crossing number; boundary points return false.
bool containsStrictly(const ExactPolygon& p, const ExactVec& q);

enum class BoundaryLocus { Interior, Exterior, Side, Vertex };

struct BoundaryLocation {
  BoundaryLocus locus = BoundaryLocus::Interior;
  std::size_t id = 0;  // side or vertex id
};

BoundaryLocation locate(const ExactPolygon& p, const ExactVec& q);

extern template class Polygon<QSqrt3>;
extern template class Polygon<Real>;

}  // namespace kb
