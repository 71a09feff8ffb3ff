#pragma once

#include <optional>
#include <ostream>

#include "kochbilliard/error.hpp"
#include "kochbilliard/scalar.hpp"

namespace kb {

/// A point or vector in the plane. One scalar kernel per computation:
/// QSqrt3 (exact) or Real (approximate); they are never mixed.
template <class S>
struct Vec2 {
  S x{};
  S y{};

  Vec2() = default;
  Vec2(S x_, S y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Vec2 operator+(Vec2 l, const Vec2& r) { return l += r; }
  friend Vec2 operator-(Vec2 l, const Vec2& r) { return l -= r; }
  friend Vec2 operator*(const S& k, const Vec2& v) { return {k * v.x, k * v.y}; }
  friend Vec2 operator*(const Vec2& v, const S& k) { return {v.x * k, v.y * k}; }
  friend Vec2 operator/(const Vec2& v, const S& k) { return {v.x / k, v.y / k}; }
  friend bool operator==(const Vec2& l, const Vec2& r) { return l.x == r.x && l.y == r.y; }
  friend bool operator!=(const Vec2& l, const Vec2& r) { return !(l == r); }

  bool isZero() const { return sign(x) == 0 && sign(y) == 0; }
};

template <class S>
using Point2 = Vec2<S>;

using ExactVec = Vec2<QSqrt3>;
using ApproxVec = Vec2<Real>;

template <class S>
S dot(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class S>
S cross(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class S>
S norm2(const Vec2<S>& v) {
  return dot(v, v);
}

inline std::ostream& operator<<(std::ostream& os, const ExactVec& v) {
  return os << "(" << v.x.str() << ", " << v.y.str() << ")";
}

/// Scales a nonzero direction so that its largest-magnitude coordinate is
/// +1 or -1. Two directions are equal as rays iff their canonical forms are.
template <class S>
Vec2<S> canonicalDirection(const Vec2<S>& v) {
  if (v.isZero()) throw Error(ErrorCode::ZeroVector, "canonicalDirection of zero vector");
  using std::abs;
  S ax = abs(v.x);
  S ay = abs(v.y);
  const S& m = ax >= ay ? ax : ay;
  return {v.x / m, v.y / m};
}

/// Canonical form of the undirected line through v (sign removed).
template <class S>
Vec2<S> canonicalLineDirection(const Vec2<S>& v) {
  Vec2<S> c = canonicalDirection(v);
  if (sign(c.x) < 0 || (sign(c.x) == 0 && sign(c.y) < 0)) c = -c;
  return c;
}

/// Rotation by k * 30 degrees about the origin (exact in Q(sqrt3)).
ExactVec rotate(const ExactVec& v, int k);
/// Unit vector at k * 30 degrees.
ExactVec unitDirection(int k);
/// Unit vector at k * 15 degrees.  Odd k are not unit in Q(sqrt3) so this
/// returns the representative (cos, sin) scaled to lie in the field.
ExactVec direction15(int k);
/// Index k in [0, 24) with v parallel to (and pointing along) direction15(k),
/// or nullopt when the angle of v is not a multiple of 15 degrees.
std::optional<int> angleIndex15(const ExactVec& v);

Vec2<Real> rotateApprox(const Vec2<Real>& v, const Real& radians);

/// Reflection of v across the line through the origin spanned by lineDir.
template <class S>
Vec2<S> reflectDirection(const Vec2<S>& v, const Vec2<S>& lineDir) {
  if (lineDir.isZero()) throw Error(ErrorCode::ZeroVector, "reflection across a zero line direction");
  S k = S(2) * dot(v, lineDir) / norm2(lineDir);
  return k * lineDir - v;
}

/// Reflects v across the line through linePoint with direction lineDir. A
/// vector is reflected as a direction; use reflectPoint for positions.
template <class S>
Vec2<S> reflectAcrossLine(const Vec2<S>& v, const Point2<S>& /*linePoint*/, const Vec2<S>& lineDir) {
  return reflectDirection(v, lineDir);
}

template <class S>
Point2<S> reflectPoint(const Point2<S>& p, const Point2<S>& linePoint, const Vec2<S>& lineDir) {
  return linePoint + reflectDirection(p - linePoint, lineDir);
}

enum class SegmentEnd { None, Start, End };

template <class S>
struct RayHit {
  Point2<S> point;
  S rayParam;
  S segParam;
  SegmentEnd end = SegmentEnd::None;
};

/// Intersection of the open ray origin + t*dir (t > 0) with the closed
/// segment [segA, segB]. Endpoint hits are reported with end != None and the
/// point set exactly to the endpoint. For the approximate kernel, `snap` is the
/// tolerance on segParam under which a hit is snapped to an endpoint, and
/// `minRayParam` excludes spurious hits at the origin.
template <class S>
std::optional<RayHit<S>> raySegmentIntersect(const Point2<S>& origin, const Vec2<S>& dir,
                                             const Point2<S>& segA, const Point2<S>& segB,
                                             const S& snap = S(0), const S& minRayParam = S(0)) {
  if (dir.isZero()) throw Error(ErrorCode::ZeroVector, "ray direction is zero");
  Vec2<S> e = segB - segA;
  if (e.isZero()) throw Error(ErrorCode::InvalidArgument, "degenerate segment");
  S denom = cross(dir, e);
  Vec2<S> w = segA - origin;
  if (sign(denom) == 0) {
    if (sign(cross(w, dir)) == 0) {
      throw Error(ErrorCode::DegenerateOverlap, "ray lies on the segment's line");
    }
    return std::nullopt;
  }
  S t = cross(w, e) / denom;
  S s = cross(w, dir) / denom;
  if (!(t > minRayParam)) return std::nullopt;
  RayHit<S> hit;
  if (sign(s + snap) < 0 || sign(s - S(1) - snap) > 0) return std::nullopt;
  using std::abs;
  if (abs(s) <= snap) {
    hit.end = SegmentEnd::Start;
    hit.point = segA;
    hit.segParam = S(0);
  } else if (abs(s - S(1)) <= snap) {
    hit.end = SegmentEnd::End;
    hit.point = segB;
    hit.segParam = S(1);
  } else {
    hit.point = origin + t * dir;
    hit.segParam = s;
  }
  hit.rayParam = t;
  return hit;
}

/// Exact test that p lies on the closed segment [a, b].
template <class S>
bool onSegment(const Point2<S>& p, const Point2<S>& a, const Point2<S>& b) {
  if (sign(cross(b - a, p - a)) != 0) return false;
  S d = dot(p - a, b - a);
  return sign(d) >= 0 && d <= norm2(b - a);
}

template <class S>
Vec2<Real> toApprox(const Vec2<S>& v) {
  return {toReal(v.x), toReal(v.y)};
}

}  // namespace kb
