#include "doctest.h"
#include "kochbilliard/unfolding.hpp"

using namespace kb;

namespace {

ExactVec pt(Rational x, Rational ySqrt3) { return ExactVec(QSqrt3(x), QSqrt3(0, ySqrt3)); }

ExactOrbit fagnano() {
  return simulate(unitTriangle(), InitialCondition<QSqrt3>{pt(Rational(1, 2), 0), unitDirection(2), std::nullopt}, 10);
}

ExactOrbit doubled(const ExactOrbit& o) {
  ExactOrbit d = o;
  for (const auto& e : o.events) {
    ExactCollisionEvent c = e;
    c.index += o.events.size();
    c.cumulativeLength += o.length;
    d.events.push_back(c);
  }
  d.period = 2 * o.period;
  d.length = o.length + o.length;
  return d;
}

// A sample of orbits from side midpoints in all inward 30-degree directions.
std::vector<ExactOrbit> sampleOrbits(const PrefractalTable& t, std::size_t stride, std::size_t budget) {
  std::vector<ExactOrbit> out;
  QSqrt3 len(t.sideLength());
  for (std::size_t i = 0; i < t.sideCount(); i += stride) {
    ExactVec mid = (t.polygon.sideStart(i) + t.polygon.sideEnd(i)) / QSqrt3(2);
    ExactVec u = t.polygon.sideDirection(i) / len;
    for (int j = 1; j <= 5; ++j) out.push_back(simulate(t.polygon, InitialCondition<QSqrt3>{mid, rotate(u, j), {}}, budget));
  }
  return out;
}

}  // namespace

TEST_CASE("isometries") {
  Mat2 r = Mat2::reflection(unitDirection(1));
  CHECK(r.isOrthogonal());
  CHECK(r * r == Mat2::identity());
  CHECK(r.det() == QSqrt3(-1));
  PlanarIsometry refl = PlanarIsometry::reflection(pt(Rational(1, 2), 0), unitDirection(3));
  CHECK(refl.apply(ExactVec(0, 0)) == ExactVec(1, 0));
  CHECK(refl.orientationReversing());
  CHECK((refl * refl) == PlanarIsometry::identity());
  PlanarIsometry g = refl * PlanarIsometry::reflection(ExactVec(0, 0), unitDirection(1));
  CHECK((g * g.inverse()) == PlanarIsometry::identity());
  CHECK_FALSE(g.orientationReversing());
  CHECK(reflectionGroup(unitTriangle()).size() == 6);
  CHECK(reflectionGroup(buildKS(2).polygon).size() == 6);
}

TEST_CASE("unfolding the Fagnano orbit") {
  ExactOrbit o = fagnano();
  UnfoldedOrbit u = unfoldOrbit(unitTriangle(), o);
  CHECK(u.copies.size() == 4);  // the table plus one copy per reflection
  CHECK(u.developedPoints.size() == 4);
  CHECK(u.chordLength2() == QSqrt3(Rational(9, 4)));
  CHECK(u.chordLength2() == o.length * o.length);
  CHECK(isPeriodicByUnfolding(unitTriangle(), o));

  ExactOrbit one = simulate(unitTriangle(), o.initial, 1);
  UnfoldedOrbit seg = unfoldOrbit(unitTriangle(), one);
  CHECK(seg.chord.a == pt(Rational(1, 2), 0));
  CHECK(seg.chord.b == pt(Rational(3, 4), Rational(1, 4)));
  CHECK_FALSE(isPeriodicByUnfolding(unitTriangle(), one));

  CHECK_THROWS_AS(unfoldOrbit(unitTriangle(), simulate(unitTriangle(), o.initial, 0)), Error);
}

TEST_CASE("unfolding through the acute apex") {
  ExactOrbit v = simulate(unitTriangle(), InitialCondition<QSqrt3>{pt(Rational(1, 2), 0), unitDirection(3), {}}, 10);
  UnfoldedOrbit u = unfoldOrbit(unitTriangle(), v);
  CHECK(u.copies.size() == 1 + 3 + 1);
  CHECK(u.chordLength2() == QSqrt3(3));
  CHECK(u.chord.b == pt(Rational(1, 2), 1));
  CHECK(isPeriodicByUnfolding(unitTriangle(), v));
}

TEST_CASE("gamma_1 chord is collinear with a developed Fagnano chord of a small tile") {
  PrefractalTable ks1 = buildKS(1);
  ExactVec mid = pt(Rational(1, 6), 0);
  ExactOrbit g = simulate(ks1.polygon, InitialCondition<QSqrt3>{mid, unitDirection(2), {}}, 200);
  REQUIRE(g.status == OrbitStatus::Periodic);
  UnfoldedOrbit ug = unfoldOrbit(ks1.polygon, g);
  ExactPolygon tile({ExactVec(0, 0), pt(Rational(1, 3), 0), pt(Rational(1, 6), Rational(1, 6))},
                    unitTriangle().angles());
  ExactOrbit f = simulate(tile, InitialCondition<QSqrt3>{mid, unitDirection(2), {}}, 10);
  UnfoldedOrbit uf = unfoldOrbit(tile, f);
  ExactVec dg = ug.chord.b - ug.chord.a;
  ExactVec df = uf.chord.b - uf.chord.a;
  CHECK(sign(cross(dg, df)) == 0);
  for (const ExactVec& p : uf.developedPoints) CHECK(sign(cross(p - ug.chord.a, dg)) == 0);
}

TEST_CASE("developed points are collinear and fold back onto the orbit") {
  for (int level = 1; level <= 2; ++level) {
    PrefractalTable t = buildKS(level);
    for (const ExactOrbit& o : sampleOrbits(t, level == 1 ? 1 : 7, 200)) {
      UnfoldedOrbit u = unfoldOrbit(t.polygon, o);
      ExactVec dir = u.chord.b - u.chord.a;
      for (const ExactVec& p : u.developedPoints) CHECK(sign(cross(p - u.chord.a, dir)) == 0);
      CHECK(u.chordLength2() == o.length * o.length);
      for (std::size_t k = 0; k < o.events.size(); ++k) {
        CHECK(u.copies[u.eventCopy[k]].inverse().apply(u.developedPoints[k + 1]) == o.events[k].point);
      }
      bool nonsingular = o.status != OrbitStatus::HitNonremovable;
      if (nonsingular) CHECK(isPeriodicByUnfolding(t.polygon, o) == (o.status == OrbitStatus::Periodic));
    }
  }
}

TEST_CASE("orbit equivalence") {
  ExactOrbit f = fagnano();
  CHECK(equivalentOrbits(unitTriangle(), f, f));
  CHECK_FALSE(equivalentOrbits(unitTriangle(), f, doubled(f)));
  ExactOrbit shifted =
      simulate(unitTriangle(), InitialCondition<QSqrt3>{pt(Rational(3, 4), Rational(1, 4)), unitDirection(6), {}}, 10);
  CHECK(equivalentOrbits(unitTriangle(), f, shifted));
  ExactOrbit vertical = simulate(unitTriangle(), InitialCondition<QSqrt3>{pt(Rational(1, 2), 0), unitDirection(3), {}}, 10);
  CHECK_FALSE(equivalentOrbits(unitTriangle(), f, vertical));

  // equivalence relation on a sample of periodic orbits of KS_1
  PrefractalTable ks1 = buildKS(1);
  std::vector<ExactOrbit> periodic;
  for (ExactOrbit& o : sampleOrbits(ks1, 1, 200)) {
    if (o.status == OrbitStatus::Periodic) periodic.push_back(std::move(o));
  }
  REQUIRE(periodic.size() >= 4);
  const std::size_t n = periodic.size();
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq[i][j] = equivalentOrbits(ks1.polygon, periodic[i], periodic[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
      }
    }
  }
}
