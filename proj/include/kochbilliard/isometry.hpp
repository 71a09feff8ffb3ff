#pragma once

#include <vector>

#include "kochbilliard/geometry.hpp"

namespace kb {

/// Exact 2x2 matrix [[a, b], [c, d]] over Q(sqrt3).
struct Mat2 {
  QSqrt3 a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  /// Linear reflection across the line spanned by dir.
  static Mat2 reflection(const ExactVec& dir);

  QSqrt3 det() const { return a * d - b * c; }
  ExactVec operator*(const ExactVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  /// Inverse of an orthogonal matrix (its transpose).
  Mat2 transpose() const { return {a, c, b, d}; }
  bool isOrthogonal() const;

  friend bool operator==(const Mat2& l, const Mat2& r) { return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d; }
  friend bool operator!=(const Mat2& l, const Mat2& r) { return !(l == r); }
};

/// x -> linear * x + translation with orthogonal linear part.
struct PlanarIsometry {
  Mat2 linear;
  ExactVec translation{0, 0};

  static PlanarIsometry identity() { return {}; }
  /// Reflection across the line through p with direction dir.
  static PlanarIsometry reflection(const ExactVec& p, const ExactVec& dir);

  bool orientationReversing() const { return sign(linear.det()) < 0; }
  ExactVec apply(const ExactVec& p) const { return linear * p + translation; }
  ExactVec applyLinear(const ExactVec& v) const { return linear * v; }
  PlanarIsometry inverse() const;

  /// (l * r)(x) = l(r(x))
  friend PlanarIsometry operator*(const PlanarIsometry& l, const PlanarIsometry& r) {
    return {l.linear * r.linear, l.linear * r.translation + l.translation};
  }
  friend bool operator==(const PlanarIsometry& l, const PlanarIsometry& r) {
    return l.linear == r.linear && l.translation == r.translation;
  }
};

/// Closure of a set of orthogonal matrices under multiplication (BFS).
/// Throws InvalidArgument if the group exceeds maxOrder.
std::vector<Mat2> generateGroup(const std::vector<Mat2>& generators, std::size_t maxOrder = 1024);

}  // namespace kb
