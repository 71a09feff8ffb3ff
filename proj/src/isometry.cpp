#include "kochbilliard/isometry.hpp"

#include <algorithm>
#include <deque>

namespace kb {

Mat2 Mat2::reflection(const ExactVec& dir) {
  if (dir.isZero()) throw Error(ErrorCode::ZeroVector, "reflection across a zero direction");
  QSqrt3 n = norm2(dir);
  QSqrt3 c2 = (dir.x * dir.x - dir.y * dir.y) / n;
  QSqrt3 s2 = QSqrt3(2) * dir.x * dir.y / n;
  return {c2, s2, s2, -c2};
}

bool Mat2::isOrthogonal() const { return transpose() * *this == identity(); }

PlanarIsometry PlanarIsometry::reflection(const ExactVec& p, const ExactVec& dir) {
  Mat2 r = Mat2::reflection(dir);
  return {r, p - r * p};
}

PlanarIsometry PlanarIsometry::inverse() const {
  Mat2 t = linear.transpose();
  return {t, -(t * translation)};
}

std::vector<Mat2> generateGroup(const std::vector<Mat2>& generators, std::size_t maxOrder) {
  std::vector<Mat2> group{Mat2::identity()};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    Mat2 g = group[queue.front()];
    queue.pop_front();
    for (const Mat2& s : generators) {
      Mat2 h = g * s;
      if (std::find(group.begin(), group.end(), h) != group.end()) continue;
      if (group.size() >= maxOrder) throw Error(ErrorCode::InvalidArgument, "generated group exceeds the order budget");
      group.push_back(h);
      queue.push_back(group.size() - 1);
    }
  }
  return group;
}

}  // namespace kb
