#include <cmath>

#include "doctest.h"
#include "kochbilliard/billiard.hpp"
#include "kochbilliard/snowflake.hpp"

using namespace kb;

namespace {


ExactVec pt(Rational x, Rational ySqrt3) { return ExactVec(QSqrt3(x), QSqrt3(0, ySqrt3)); }

const ExactPolygon& delta() { return unitTriangle(); }

ExactVec unitSideDirection(const ExactPolygon& p, std::size_t i, const QSqrt3& len) {
  return p.sideDirection(i) / len;
}

// Plain floating-point billiard in a wedge with walls at 0 and 60 degrees,
// started a distance delta off the line through the corner. Independent of
// the library: only reflections across the two walls.
double wedgeExitAngle(double incomingDeg, double delta) {
  double a = incomingDeg * M_PI / 180;
  double dx = std::cos(a), dy = std::sin(a);
  // start at distance 1 from the corner, back along the incoming ray, shifted sideways
  double px = -dx + delta * -dy, py = -dy + delta * dx;
  const double wall[2][2] = {{1, 0}, {0.5, std::sqrt(3.0) / 2}};
  int last = -1;
  for (int bounce = 0; bounce < 10; ++bounce) {
    double bestT = 1e300;
    int bestW = -1;
    for (int w = 0; w < 2; ++w) {
      if (w == last) continue;
      double ex = wall[w][0], ey = wall[w][1];
      double denom = dx * ey - dy * ex;
      if (std::abs(denom) < 1e-15) continue;
      double t = (-px * ey + py * ex) / denom;
      double s = (-px * dy + py * dx) / denom;
      if (t > 1e-12 && s > 0 && t < bestT) {
        bestT = t;
        bestW = w;
      }
    }
    if (bestW < 0) break;
    px += bestT * dx;
    py += bestT * dy;
    double ex = wall[bestW][0], ey = wall[bestW][1];
    double k = 2 * (dx * ex + dy * ey);
    dx = k * ex - dx;
    dy = k * ey - dy;
    last = bestW;
  }
  double deg = std::atan2(dy, dx) * 180 / M_PI;
  return deg < 0 ? deg + 360 : deg;
}

}  // namespace

TEST_CASE("step on the unit triangle") {
  PhaseState<QSqrt3> s{pt(Rational(1, 2), 0), unitDirection(2), Locus::side(0)};
  CollisionEvent<QSqrt3> e = step(delta(), s);
  CHECK(e.point == pt(Rational(3, 4), Rational(1, 4)));
  CHECK(e.locus == Locus::side(1));
  REQUIRE(e.outgoing);
  CHECK(*e.outgoing == reflectDirection(unitDirection(2), delta().sideDirection(1)));
  CHECK(*e.outgoing == unitDirection(6));

  PhaseState<QSqrt3> up{pt(Rational(1, 2), 0), unitDirection(3), Locus::side(0)};
  CollisionEvent<QSqrt3> apex = step(delta(), up);
  CHECK(apex.point == pt(Rational(1, 2), Rational(1, 2)));
  CHECK(apex.locus == Locus::vertex(2, VertexKind::Acute));
  REQUIRE(apex.outgoing);
  CHECK(*apex.outgoing == unitDirection(9));
}

TEST_CASE("step into an obtuse vertex stops the flow") {
  PrefractalTable ks1 = buildKS(1);
  ExactVec centroid = pt(Rational(1, 2), Rational(1, 6));
  ExactVec target = ks1.polygon.vertex(1);
  REQUIRE(ks1.polygon.kind(1) == VertexKind::Obtuse);
  PhaseState<QSqrt3> s{centroid, target - centroid, std::nullopt};
  CollisionEvent<QSqrt3> e = step(ks1.polygon, s);
  CHECK(e.locus == Locus::vertex(1, VertexKind::Obtuse));
  CHECK(e.point == target);
  CHECK_FALSE(e.outgoing);
}

TEST_CASE("acute corner continuation") {
  // vertex 0 of the unit triangle: walls at 0 and 60 degrees
  CHECK(cornerContinue(0, unitDirection(7), delta()) == unitDirection(1));
  CHECK(cornerContinue(0, unitDirection(6), delta()) == unitDirection(2));
  CHECK(wedgeExitAngle(210, 1e-9) == doctest::Approx(30).epsilon(1e-6));
  CHECK(wedgeExitAngle(180.0001, 1e-9) == doctest::Approx(60).epsilon(1e-4));
  // the delta-perturbed orbit gives the same exit direction for generic angles
  for (int deg : {190, 200, 215, 225, 235}) {
    double exitDeg = wedgeExitAngle(deg, 1e-9);
    // reverse then reflect across the 30 degree bisector: 2*30 - (deg - 180)
    double expected = std::fmod(60 - (deg - 180) + 360, 360);
    CHECK(exitDeg == doctest::Approx(expected).epsilon(1e-6));
  }
  // the same rule in the library on the exact 30-degree grid
  for (int k = 6; k <= 8; ++k) {
    ExactVec out = cornerContinue(0, unitDirection(k), delta());
    CHECK(out == reflectDirection(-unitDirection(k), unitDirection(1)));
  }
  PrefractalTable ks1 = buildKS(1);
  CHECK_THROWS_AS(cornerContinue(1, unitDirection(0), ks1.polygon), Error);
}

TEST_CASE("simulate: Fagnano and apex orbits of the triangle") {
  InitialCondition<QSqrt3> fag{pt(Rational(1, 2), 0), unitDirection(2), AngleMultipleOfPi6{2, 0}};
  ExactOrbit o = simulate(delta(), fag, 100);
  CHECK(o.status == OrbitStatus::Periodic);
  CHECK(o.period == 3);
  CHECK(o.length == QSqrt3(Rational(3, 2)));
  std::vector<ExactVec> fp = footprint(o);
  REQUIRE(fp.size() == 3);
  CHECK(fp[0] == pt(Rational(3, 4), Rational(1, 4)));
  CHECK(fp[1] == pt(Rational(1, 4), Rational(1, 4)));
  CHECK(fp[2] == pt(Rational(1, 2), 0));
  CHECK(footprintSet(o).size() == 3);

  InitialCondition<QSqrt3> vert{pt(Rational(1, 2), 0), unitDirection(3), std::nullopt};
  ExactOrbit v = simulate(delta(), vert, 100);
  CHECK(v.status == OrbitStatus::Periodic);
  CHECK(v.period == 2);
  CHECK(v.length == QSqrt3::sqrt3());
  CHECK(v.events[0].locus == Locus::vertex(2, VertexKind::Acute));

  // interior basepoint on the Fagnano triangle
  InitialCondition<QSqrt3> inner{pt(Rational(5, 8), Rational(1, 8)), unitDirection(2), std::nullopt};
  ExactOrbit in = simulate(delta(), inner, 100);
  CHECK(in.status == OrbitStatus::Periodic);
  CHECK(in.period == 3);
  CHECK(in.length == QSqrt3(Rational(3, 2)));

  ExactOrbit empty = simulate(delta(), fag, 0);
  CHECK(empty.events.empty());
  CHECK(empty.status == OrbitStatus::Exhausted);
  CHECK(footprint(empty).empty());
}

TEST_CASE("simulate: float oracle for the Fagnano length") {
  PrecisionScope p(128);
  ApproxPolygon tri = toApprox(delta());
  InitialCondition<Real> ic{toApprox(pt(Rational(1, 2), 0)), toApprox(unitDirection(2)), std::nullopt};
  ApproxOrbit o = simulate(tri, ic, 100);
  CHECK(o.status == OrbitStatus::Periodic);
  CHECK(o.candidateOnly);
  CHECK(o.period == 3);
  CHECK(o.length.convert_to<double>() == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("simulate rejects bad initial conditions") {
  CHECK_THROWS_AS(simulate(delta(), InitialCondition<QSqrt3>{pt(Rational(1, 2), 0), ExactVec(1, 1), std::nullopt}, 5),
                  Error);
  CHECK_THROWS_AS(simulate(delta(), InitialCondition<QSqrt3>{pt(Rational(1, 2), 0), unitDirection(9), std::nullopt}, 5),
                  Error);
  CHECK_THROWS_AS(simulate(delta(), InitialCondition<QSqrt3>{pt(2, 0), unitDirection(3), std::nullopt}, 5), Error);
  CHECK_THROWS_AS(simulate(delta(), InitialCondition<QSqrt3>{pt(Rational(1, 2), 0), ExactVec(0, 0), std::nullopt}, 5),
                  Error);
}

TEST_CASE("orbit properties on KS_1 and KS_2") {
  for (int level = 1; level <= 2; ++level) {
    PrefractalTable t = buildKS(level);
    QSqrt3 len(t.sideLength());
    int periodic = 0;
    for (std::size_t i = 0; i < t.sideCount(); i += 5) {
      ExactVec mid = (t.polygon.sideStart(i) + t.polygon.sideEnd(i)) / QSqrt3(2);
      ExactVec u = unitSideDirection(t.polygon, i, len);
      for (int j = 1; j <= 5; ++j) {
        InitialCondition<QSqrt3> ic{mid, rotate(u, j), std::nullopt};
        ExactOrbit o = simulate(t.polygon, ic, 300);
        QSqrt3 prev(0);
        for (const auto& e : o.events) {
          CHECK(e.cumulativeLength > prev);
          prev = e.cumulativeLength;
          if (e.outgoing) CHECK(norm2(*e.outgoing) == QSqrt3(1));
          if (e.locus.kind == LocusKind::SideInterior) {
            CHECK(*e.outgoing == reflectDirection(e.incoming, t.polygon.sideDirection(e.locus.id)));
          }
        }
        if (o.status == OrbitStatus::Periodic) {
          ++periodic;
          CHECK(footprintSet(o).size() <= o.period);
          // soundness: another period returns to the same state
          InitialCondition<QSqrt3> again{o.events.back().point, *o.events.back().outgoing, std::nullopt};
          ExactOrbit o2 = simulate(t.polygon, again, o.period);
          CHECK(o2.status == OrbitStatus::Periodic);
          CHECK(o2.period == o.period);
          CHECK(o2.length == o.length);
        }
        if (o.events.size() >= 3 && o.status != OrbitStatus::HitNonremovable) {
          // time reversal replays the event points backwards
          const auto& last = o.events.back();
          InitialCondition<QSqrt3> back{last.point, -last.incoming, std::nullopt};
          ExactOrbit r = simulate(t.polygon, back, o.events.size());
          REQUIRE(r.events.size() >= o.events.size() - 1);
          for (std::size_t k = 0; k + 1 < o.events.size(); ++k) {
            CHECK(r.events[k].point == o.events[o.events.size() - 2 - k].point);
          }
        }
      }
    }
    CHECK(periodic > 0);
  }
}
