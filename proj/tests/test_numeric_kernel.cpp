#include <random>

#include "doctest.h"
#include "kochbilliard/geometry.hpp"

using namespace kb;

namespace {

const QSqrt3 kHalf(Rational(1, 2));
const QSqrt3 kHalfRoot3(0, Rational(1, 2));

// 200-bit float evaluation of a + b sqrt3; the oracle for exact signs.
Real eval200(const QSqrt3& s) { return s.toReal(); }

QSqrt3 randomScalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-2000, 2000);
  std::uniform_int_distribution<long> den(1, 500);
  return QSqrt3(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("sign of a + b sqrt3") {
  CHECK(sign(QSqrt3(0, 0)) == 0);
  CHECK(sign(QSqrt3(0, 1)) == 1);
  CHECK(sign(QSqrt3(5, -3)) == -1);
  PrecisionScope p(200);
  CHECK(eval200(QSqrt3(5, -3)) < 0);
  // near-cancellation: 97 - 56 sqrt3 = 1 / (97 + 56 sqrt3) > 0
  CHECK(sign(QSqrt3(97, -56)) == 1);
  CHECK(sign(QSqrt3(-97, 56)) == -1);
}

TEST_CASE("sign agrees with 200-bit evaluation on random differences") {
  PrecisionScope p(200);
  std::mt19937_64 rng(12345);
  const Real margin = boost::multiprecision::pow(Real(2), -150);
  int decided = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    QSqrt3 s = randomScalar(rng);
    QSqrt3 t = randomScalar(rng);
    Real diff = eval200(s) - eval200(t);
    if (boost::multiprecision::abs(diff) <= margin) continue;
    ++decided;
    CHECK(sign(s - t) == (diff > 0 ? 1 : -1));
  }
  CHECK(decided > 1900);
}

TEST_CASE("field arithmetic is exact") {
  QSqrt3 x(Rational(3, 4), Rational(-2, 5));
  QSqrt3 y(Rational(-1, 7), Rational(5, 3));
  CHECK((x * y) / y == x);
  CHECK((x + y) - y == x);
  CHECK(QSqrt3::sqrt3() * QSqrt3::sqrt3() == QSqrt3(3));
  CHECK_THROWS_AS(x / QSqrt3(0), Error);
}

TEST_CASE("exact text form round-trips") {
  for (const QSqrt3& s : {QSqrt3(0), QSqrt3(Rational(5, 12), Rational(-1, 12)), QSqrt3(-3, 7), QSqrt3(0, -1)}) {
    CHECK(QSqrt3::parse(s.str()) == s);
  }
  CHECK(QSqrt3::parse("1/2+1/2√3") == QSqrt3(Rational(1, 2), Rational(1, 2)));
  CHECK(QSqrt3::parse("-7/3") == QSqrt3(Rational(-7, 3)));
  CHECK_THROWS_AS(QSqrt3::parse("1/2+x√3"), Error);
}

TEST_CASE("rotate by multiples of 30 degrees") {
  ExactVec e1(1, 0);
  CHECK(rotate(e1, 2) == ExactVec(kHalf, kHalfRoot3));
  CHECK(rotate(e1, 12) == e1);
  CHECK(rotate(ExactVec(kHalf, kHalfRoot3), -2) == e1);
  CHECK_THROWS_AS(rotate(ExactVec(0, 0), 1), Error);

  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    ExactVec v(randomScalar(rng), randomScalar(rng));
    if (v.isZero()) continue;
    std::uniform_int_distribution<int> k(-20, 20);
    int a = k(rng), b = k(rng);
    int c = 12 - a - b;
    CHECK(rotate(rotate(rotate(v, a), b), c) == v);
  }
}

TEST_CASE("reflection across a line") {
  ExactVec origin(0, 0);
  CHECK(reflectAcrossLine(ExactVec(1, 1), origin, ExactVec(1, 0)) == ExactVec(1, -1));
  ExactVec r = reflectAcrossLine(ExactVec(1, 0), origin, unitDirection(2));
  CHECK(r == ExactVec(-kHalf, kHalfRoot3));
  // float cross-check of the same reflection
  CHECK(r.x.toDouble() == doctest::Approx(std::cos(2 * M_PI / 3)));
  CHECK(r.y.toDouble() == doctest::Approx(std::sin(2 * M_PI / 3)));
  ExactVec along = unitDirection(2);
  CHECK(reflectAcrossLine(along, origin, along) == along);

  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    ExactVec v(randomScalar(rng), randomScalar(rng));
    ExactVec d(randomScalar(rng), randomScalar(rng));
    if (d.isZero()) continue;
    CHECK(reflectAcrossLine(reflectAcrossLine(v, origin, d), origin, d) == v);
    CHECK(norm2(reflectAcrossLine(v, origin, d)) == norm2(v));
  }
}

TEST_CASE("ray-segment intersection") {
  auto hit = raySegmentIntersect(ExactVec(0, 0), ExactVec(1, 1), ExactVec(1, 0), ExactVec(1, 2));
  REQUIRE(hit);
  CHECK(hit->point == ExactVec(1, 1));
  CHECK(hit->segParam == QSqrt3(Rational(1, 2)));
  CHECK(hit->end == SegmentEnd::None);

  // straight up from the base midpoint of the unit triangle lands on the apex
  ExactVec apex(kHalf, kHalfRoot3);
  auto apexHit = raySegmentIntersect(ExactVec(kHalf, 0), unitDirection(3), ExactVec(1, 0), apex);
  REQUIRE(apexHit);
  CHECK(apexHit->point == apex);
  CHECK(apexHit->end == SegmentEnd::End);
  CHECK(apexHit->rayParam == kHalfRoot3);

  CHECK_FALSE(raySegmentIntersect(ExactVec(0, 0), ExactVec(-1, 0), ExactVec(1, 0), ExactVec(1, 2)));
  CHECK_THROWS_AS(raySegmentIntersect(ExactVec(0, 0), ExactVec(1, 0), ExactVec(1, 0), ExactVec(2, 0)), Error);
  CHECK_FALSE(raySegmentIntersect(ExactVec(0, 1), ExactVec(1, 0), ExactVec(1, 0), ExactVec(2, 0)));
}

TEST_CASE("intersection points satisfy both parametrizations") {
  std::mt19937_64 rng(2024);
  int hits = 0;
  for (int iter = 0; iter < 300; ++iter) {
    ExactVec o(randomScalar(rng), randomScalar(rng));
    ExactVec d(randomScalar(rng), randomScalar(rng));
    ExactVec a(randomScalar(rng), randomScalar(rng));
    ExactVec b(randomScalar(rng), randomScalar(rng));
    if (d.isZero() || a == b) continue;
    auto h = raySegmentIntersect(o, d, a, b);
    if (!h) continue;
    ++hits;
    CHECK(o + h->rayParam * d == h->point);
    CHECK(a + h->segParam * (b - a) == h->point);
    CHECK(sign(h->rayParam) > 0);
    CHECK(sign(h->segParam) >= 0);
    CHECK(h->segParam <= QSqrt3(1));
  }
  CHECK(hits > 20);
}

TEST_CASE("canonical directions decide ray equality") {
  ExactVec v(QSqrt3(0, 2), QSqrt3(2));
  CHECK(canonicalDirection(v) == canonicalDirection(QSqrt3(Rational(1, 3)) * v));
  CHECK(canonicalDirection(v) != canonicalDirection(-v));
  CHECK(canonicalLineDirection(v) == canonicalLineDirection(-v));
  CHECK_THROWS_AS(canonicalDirection(ExactVec(0, 0)), Error);
  for (int k = 0; k < 24; ++k) CHECK(angleIndex15(QSqrt3(3) * direction15(k)) == k);
  CHECK_FALSE(angleIndex15(ExactVec(2, 1)));
}

TEST_CASE("approximate kernel honours the precision scope") {
  PrecisionScope p(200);
  Real x = QSqrt3(0, 1).toReal();
  CHECK(boost::multiprecision::abs(x * x - 3) < boost::multiprecision::pow(Real(2), -190));
  ApproxVec r = rotateApprox(ApproxVec(Real(1), Real(0)), boost::multiprecision::acos(Real(-1)) / 3);
  CHECK(boost::multiprecision::abs(r.x - Real(0.5)) < boost::multiprecision::pow(Real(2), -190));
}
