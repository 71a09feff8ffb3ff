#include "kochbilliard/geometry.hpp"

#include <array>

namespace kb {
namespace {

int mod(int k, int m) { return ((k % m) + m) % m; }

// cos(k * 30 deg) for k = 0..11
const QSqrt3& cos30(int k) {
  static const std::array<QSqrt3, 12> table = [] {
    const QSqrt3 h(Rational(1, 2));
    const QSqrt3 r(0, Rational(1, 2));
    return std::array<QSqrt3, 12>{QSqrt3(1), r, h, QSqrt3(0), -h, -r, QSqrt3(-1), -r, -h, QSqrt3(0), h, r};
  }();
  return table[mod(k, 12)];
}

const QSqrt3& sin30(int k) { return cos30(k - 3); }

}  // namespace

ExactVec rotate(const ExactVec& v, int k) {
  if (v.isZero()) throw Error(ErrorCode::ZeroVector, "rotate of zero vector");
  const QSqrt3& c = cos30(k);
  const QSqrt3& s = sin30(k);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

ExactVec unitDirection(int k) { return {cos30(k), sin30(k)}; }

ExactVec direction15(int k) {
  k = mod(k, 24);
  if (k % 2 == 0) return unitDirection(k / 2);
  // tan 15 deg = 2 - sqrt3
  return rotate(ExactVec(QSqrt3(1), QSqrt3(2, -1)), (k - 1) / 2);
}

std::optional<int> angleIndex15(const ExactVec& v) {
  static const std::array<ExactVec, 24> table = [] {
    std::array<ExactVec, 24> t;
    for (int k = 0; k < 24; ++k) t[k] = canonicalDirection(direction15(k));
    return t;
  }();
  ExactVec c = canonicalDirection(v);
  for (int k = 0; k < 24; ++k) {
    if (table[k] == c) return k;
  }
  return std::nullopt;
}

Vec2<Real> rotateApprox(const Vec2<Real>& v, const Real& radians) {
  Real c = boost::multiprecision::cos(radians);
  Real s = boost::multiprecision::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace kb
