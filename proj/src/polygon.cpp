#include "kochbilliard/polygon.hpp"

#include <numeric>

namespace kb {

RationalAngle makeAngle(long m, long n) {
  if (m <= 0 || n <= 0) throw Error(ErrorCode::InvalidArgument, "angle numerator and denominator must be positive");
  long g = std::gcd(m, n);
  return {m / g, n / g};
}

const char* name(VertexKind k) { return k == VertexKind::Acute ? "acute" : "obtuse"; }

template <class S>
Polygon<S>::Polygon(std::vector<Point2<S>> vertices, std::vector<RationalAngle> angles)
    : vertices_(std::move(vertices)), angles_(std::move(angles)) {
  if (vertices_.size() < 3) throw Error(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
  if (angles_.size() != vertices_.size()) throw Error(ErrorCode::InvalidArgument, "one angle per vertex required");
  xs_.reserve(size());
  ys_.reserve(size());
  for (const auto& v : vertices_) {
    xs_.push_back(toDouble(v.x));
    ys_.push_back(toDouble(v.y));
  }
}

template class Polygon<QSqrt3>;
template class Polygon<Real>;

ExactPolygon makeExactPolygon(std::vector<ExactVec> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
  std::vector<int> dirIndex(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExactVec d = vertices[(i + 1) % n] - vertices[i];
    if (d.isZero()) throw Error(ErrorCode::InvalidArgument, "repeated vertex");
    auto k = angleIndex15(d);
    if (!k) throw Error(ErrorCode::NonRationalPolygon, "side " + std::to_string(i) + " is not at a rational angle");
    dirIndex[i] = *k;
  }
  std::vector<RationalAngle> angles(n);
  int totalTurn = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // turn from side i-1 into side i, in units of 15 degrees, in (-12, 12]
    int turn = ((dirIndex[i] - dirIndex[(i + n - 1) % n]) % 24 + 24) % 24;
    if (turn > 12) turn -= 24;
    if (turn == 12) throw Error(ErrorCode::InvalidArgument, "zero interior angle");
    if (turn == 0) throw Error(ErrorCode::InvalidArgument, "straight angle at vertex " + std::to_string(i));
    totalTurn += turn;
    angles[i] = makeAngle(12 - turn, 12);
  }
  if (totalTurn != 24) throw Error(ErrorCode::InvalidArgument, "polygon is not positively oriented");
  return ExactPolygon(std::move(vertices), std::move(angles));
}

ApproxPolygon toApprox(const ExactPolygon& p) {
  std::vector<ApproxVec> vs;
  vs.reserve(p.size());
  for (const auto& v : p.vertices()) vs.push_back(toApprox(v));
  return ApproxPolygon(std::move(vs), p.angles());
}

namespace {

bool segmentsMeet(const ExactVec& a, const ExactVec& b, const ExactVec& c, const ExactVec& d) {
  int d1 = sign(cross(b - a, c - a));
  int d2 = sign(cross(b - a, d - a));
  int d3 = sign(cross(d - c, a - c));
  int d4 = sign(cross(d - c, b - c));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && onSegment(c, a, b)) || (d2 == 0 && onSegment(d, a, b)) || (d3 == 0 && onSegment(a, c, d)) ||
         (d4 == 0 && onSegment(b, c, d));
}

}  // namespace

bool isSimple(const ExactPolygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // adjacent sides may only share their common vertex: not collinear-overlapping
        ExactVec di = p.sideDirection(i);
        ExactVec dj = p.sideDirection(j);
        if (sign(cross(di, dj)) == 0 && sign(dot(di, dj)) < 0) return false;
        continue;
      }
      if (segmentsMeet(p.sideStart(i), p.sideEnd(i), p.sideStart(j), p.sideEnd(j))) return false;
    }
  }
  return true;
}

BoundaryLocation locate(const ExactPolygon& p, const ExactVec& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.vertex(i) == q) return {BoundaryLocus::Vertex, i};
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (onSegment(q, p.sideStart(i), p.sideEnd(i))) return {BoundaryLocus::Side, i};
  }
  // crossing number along the horizontal ray to the right
  bool inside = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ExactVec& a = p.sideStart(i);
    const ExactVec& b = p.sideEnd(i);
    bool aAbove = a.y > q.y;
    bool bAbove = b.y > q.y;
    if (aAbove == bAbove) continue;
    QSqrt3 x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (x > q.x) inside = !inside;
  }
  return {inside ? BoundaryLocus::Interior : BoundaryLocus::Exterior, 0};
}

bool containsStrictly(const ExactPolygon& p, const ExactVec& q) {
  return locate(p, q).locus == BoundaryLocus::Interior;
}

}  // namespace kb
