#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "kochbilliard/taxonomy.hpp"

using namespace kb;

namespace {

ExactVec pt(Rational x, Rational ySqrt3) { return ExactVec(QSqrt3(x), QSqrt3(0, ySqrt3)); }

InitialCondition<QSqrt3> source(Rational x, int k) { return {pt(x, 0), unitDirection(k), std::nullopt}; }

bool onLeg(const ExactOrbit& o, const ExactVec& p) {
  std::vector<ExactVec> f = footprint(o);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (onSegment(p, f[k], f[(k + 1) % f.size()])) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("inducing conditions") {
  PrefractalTable ks1 = buildKS(1);
  InducedCondition ic = induceCondition(ks1, fagnanoSource());
  // midpoint of the base cell side from (1/3, 0) to the cell apex
  ExactVec oracle = (pt(Rational(1, 3), 0) + pt(Rational(1, 2), Rational(-1, 6))) / QSqrt3(2);
  CHECK(ic.condition.basepoint == pt(Rational(5, 12), Rational(-1, 12)));
  CHECK(ic.condition.basepoint == oracle);
  CHECK(ic.condition.direction == unitDirection(2));
  CHECK(ic.locus.kind == LocusKind::SideInterior);
  CHECK_FALSE(ic.startsAtVertex);

  // already on the boundary of KS_1
  InducedCondition kept = induceCondition(ks1, source(Rational(1, 6), 2));
  CHECK(kept.condition.basepoint == pt(Rational(1, 6), 0));

  InducedCondition vertex = induceCondition(ks1, source(Rational(1, 3), 2));
  CHECK(vertex.startsAtVertex);
  CHECK(vertex.condition.basepoint == pt(Rational(1, 3), 0));

  // interior source: the basepoint slides back to the boundary
  InducedCondition inner = induceCondition(buildKS(0), {pt(Rational(1, 2), Rational(1, 6)), unitDirection(3), {}});
  CHECK(inner.condition.basepoint == pt(Rational(1, 2), 0));

  CHECK_THROWS_AS(induceCondition(ks1, {pt(2, 0), unitDirection(2), {}}), Error);
}

TEST_CASE("induced conditions are idempotent and stay on the source line") {
  for (int n = 0; n <= 3; ++n) {
    PrefractalTable t = buildKS(n);
    for (int j = 1; j <= 5; ++j) {
      for (int num = 1; num < 9; ++num) {
        InitialCondition<QSqrt3> src = source(Rational(num, 9), j);
        InducedCondition ic = induceCondition(t, src);
        CHECK(sign(cross(ic.condition.basepoint - src.basepoint, src.direction)) == 0);
        CHECK(ic.condition.direction == src.direction);
        InducedCondition again = induceCondition(t, ic.condition);
        CHECK(again.condition.basepoint == ic.condition.basepoint);
        CHECK(again.locus == ic.locus);
      }
    }
  }
}

TEST_CASE("gamma orbits") {
  GammaEnumeration g0 = enumerateGamma(buildKS(0), 100);
  CHECK(g0.distinctPaths() == 1);
  CHECK(g0.orbits[0].period == 3);

  PrefractalTable ks1 = buildKS(1);
  GammaEnumeration g1 = enumerateGamma(ks1, 1000);
  CHECK(g1.orbits.size() == 12);
  CHECK(g1.distinctPaths() == 2);
  for (std::size_t i = 0; i < 12; ++i) {
    const ExactOrbit& rep = g1.orbits[g1.representatives[g1.pathClass[i]]];
    CHECK(equivalentOrbits(ks1.polygon, g1.orbits[i], rep));
  }
  CHECK_FALSE(equivalentOrbits(ks1.polygon, g1.orbits[g1.representatives[0]], g1.orbits[g1.representatives[1]]));

  for (int n = 0; n <= 3; ++n) {
    GammaEnumeration g = enumerateGamma(buildKS(n), 20000);
    for (const ExactOrbit& o : g.orbits) {
      CHECK(o.status == OrbitStatus::Periodic);
      for (const auto& e : o.events) CHECK(e.locus.kind == LocusKind::SideInterior);
    }
  }
}

TEST_CASE("Fagnano collection") {
  FagnanoCollection f0 = fagnanoCollection(buildKS(0), 100);
  CHECK(f0.sides.size() == 3);
  CHECK(f0.distinctPaths == 1);
  CHECK(f0.minLength == QSqrt3(Rational(3, 2)));

  for (int n = 1; n <= 2; ++n) {
    PrefractalTable t = buildKS(n);
    FagnanoCollection f = fagnanoCollection(t, 20000);
    std::vector<Segment> delta = intersectWithDelta(n);
    REQUIRE(f.sides.size() == delta.size());
    for (const Segment& s : delta) {
      ExactVec m = (s.a + s.b) / QSqrt3(2);
      bool found = false;
      for (std::size_t i : f.sides) found = found || (t.polygon.sideStart(i) + t.polygon.sideEnd(i)) / QSqrt3(2) == m;
      CHECK(found);
    }
    REQUIRE(f.minOtherLength.has_value());
    CHECK(f.shortestInGamma == (f.minLength <= *f.minOtherLength));
    MESSAGE("level " << n << ": shortest Fagnano " << f.minLength.str() << ", shortest other gamma " << f.minOtherLength->str());
  }
}

TEST_CASE("IFS maps") {
  IFSSystem ifs = ppfIFS();
  std::vector<Cell> c1 = cells(1);
  for (int i = 0; i < 3; ++i) {
    const Similarity& w = ifs.cellMaps[i];
    CHECK(w.ratio2() == QSqrt3(Rational(1, 9)));
    CHECK(w * w.inverse() == Similarity::identity());
    std::vector<ExactVec> img{w.apply(ExactVec(0, 0)), w.apply(ExactVec(1, 0)), w.apply(pt(Rational(1, 2), Rational(1, 2)))};
    bool matched = false;
    for (const Cell& c : c1) {
      matched = matched || std::is_permutation(img.begin(), img.end(), c.triangle.begin(), c.triangle.end());
    }
    CHECK(matched);
    for (const Similarity& f : ifs.subsystems[i]) CHECK(f.ratio2() == QSqrt3(Rational(1, 9)));
  }
}

TEST_CASE("ppF by IFS agrees with simulation") {
  PPFConstruction c0 = ppfByIFS(0);
  CHECK(c0.footprint.size() == 3);
  ExactOrbit s0 = ppfBySimulation(0, 100);
  CHECK(s0.period == 3);
  CHECK(ppfByIFS(1).footprint.size() == 6);
  for (int n = 0; n <= 3; ++n) {
    PPFConstruction c = ppfByIFS(n);
    ExactOrbit s = ppfBySimulation(n, 1000);
    CHECK(c.footprint.size() == 3u << n);
    CHECK(footprint(s) == c.footprint);
    CHECK(sameCycle(footprint(s), c.footprint));
    CHECK(c.segments.size() == c.footprint.size());
  }

  // ppF_2 crosses the ghost midpoint of every cell it enters
  ExactOrbit s2 = ppfBySimulation(2, 1000);
  std::vector<ExactVec> f2 = footprint(s2);
  for (int level = 1; level <= 2; ++level) {
    for (const Cell& c : cells(level)) {
      bool entered = false;
      for (const ExactVec& p : f2) {
        entered = entered || onSegment(p, c.triangle[0], c.triangle[2]) || onSegment(p, c.triangle[1], c.triangle[2]);
      }
      if (level == 2 && !entered) continue;
      CHECK(onLeg(s2, (c.ghost.a + c.ghost.b) / QSqrt3(2)));
    }
  }
}

TEST_CASE("orbit classes and compatible sequences") {
  CompatibleSequence fag = compatibleSequence(fagnanoSource(), 3, 2000);
  for (int n = 0; n <= 3; ++n) {
    CHECK(fag.orbits[n].status == OrbitStatus::Periodic);
    CHECK(fag.labels[n] == OrbitClass::PrimaryPiecewiseFagnano);
    CHECK(sign(cross(fag.induced[n].condition.basepoint - fagnanoSource().basepoint, unitDirection(2))) == 0);
  }

  CompatibleSequence pi6 = compatibleSequence(source(Rational(1, 2), 1), 3, 20000);
  for (int n = 0; n <= 3; ++n) {
    CHECK(pi6.orbits[n].status == OrbitStatus::Periodic);
    CHECK(pi6.labels[n] == OrbitClass::NonGammaPeriodic);
  }

  CompatibleSequence third = compatibleSequence(source(Rational(1, 3), 2), 3, 20000);
  for (int n = 1; n <= 3; ++n) {
    CHECK((third.labels[n] == OrbitClass::SingularObtuse || third.labels[n] == OrbitClass::SingularAcute));
  }

  PrefractalTable ks1 = buildKS(1);
  GammaEnumeration g1 = enumerateGamma(ks1, 1000);
  std::vector<std::size_t> ds = deltaSides(ks1);
  for (std::size_t i = 0; i < g1.orbits.size(); ++i) {
    bool member = std::find(ds.begin(), ds.end(), i) != ds.end();
    OrbitClass c = classifyOrbit(ks1, g1.orbits[i]);
    if (member) {
      CHECK(c == OrbitClass::Fagnano);
    } else {
      CHECK((c == OrbitClass::Gamma || c == OrbitClass::PrimaryPiecewiseFagnano));
    }
  }
  CHECK(classifyOrbit(buildKS(0), simulate(unitTriangle(), source(Rational(1, 2), 3), 10)) == OrbitClass::SingularAcute);
}

TEST_CASE("triadic sources are singular") {
  for (int j = 1; j <= 2; ++j) {
    long denom = j == 1 ? 3 : 9;
    for (long nu = 1; nu < denom; ++nu) {
      if (nu % 3 == 0) continue;
      for (int n = j; n <= 3; ++n) {
        PrefractalTable t = buildKS(n);
        InducedCondition ic = induceCondition(t, source(Rational(nu, denom), 2));
        ExactOrbit o = simulate(t.polygon, ic.condition, 20000);
        OrbitClass c = classifyOrbit(t, o);
        INFO("nu=" << nu << "/" << denom << " n=" << n);
        CHECK((c == OrbitClass::SingularObtuse || c == OrbitClass::SingularAcute));
      }
    }
  }
}

TEST_CASE("odd iterates of the Fagnano orbit") {
  ExactOrbit f = simulate(unitTriangle(), fagnanoSource(), 10);
  CHECK(oddPeriodCheck(f) == 0L);
  ExactOrbit thrice = f;
  for (int r = 1; r < 3; ++r) {
    for (const auto& e : f.events) {
      ExactCollisionEvent c = e;
      c.index += r * f.events.size();
      c.cumulativeLength += QSqrt3(r) * f.length;
      thrice.events.push_back(c);
    }
  }
  thrice.period = 9;
  thrice.length = QSqrt3(3) * f.length;
  CHECK(oddPeriodCheck(thrice) == 1L);
  ExactOrbit apex = simulate(unitTriangle(), source(Rational(1, 2), 3), 10);
  REQUIRE(apex.status == OrbitStatus::Periodic);
  CHECK(apex.period % 2 == 0);
  CHECK_FALSE(oddPeriodCheck(apex).has_value());
}

TEST_CASE("footprint against the Cantor approximation") {
  PrecisionScope scope(200);
  Real d0 = footprintVsCantor(0);
  CHECK(abs(d0 - Real(0.5)) < Real(1e-50));
  Real prev = d0;
  for (int n = 1; n <= 3; ++n) {
    Real d = footprintVsCantor(n);
    CHECK(d <= pow(Real(3), -n));
    CHECK(d <= prev);
    prev = d;

    // oracle: brute force in doubles against the vertices of the level-n
    // cells the footprint lies on
    std::vector<ExactVec> fp = footprint(ppfBySimulation(n, 1000));
    std::vector<ExactVec> verts;
    for (const Cell& c : cells(n)) {
      bool carries = false;
      for (const ExactVec& p : fp) carries = carries || onSegment(p, c.triangle[0], c.triangle[2]) || onSegment(p, c.triangle[1], c.triangle[2]);
      if (carries) verts.insert(verts.end(), c.triangle.begin(), c.triangle.end());
    }
    auto dist = [](const ExactVec& p, const ExactVec& q) {
      return std::hypot(toDouble(p.x) - toDouble(q.x), toDouble(p.y) - toDouble(q.y));
    };
    double h = 0;
    for (const ExactVec& p : fp) {
      double best = 1e9;
      for (const ExactVec& q : verts) best = std::min(best, dist(p, q));
      h = std::max(h, best);
    }
    for (const ExactVec& q : verts) {
      double best = 1e9;
      for (const ExactVec& p : fp) best = std::min(best, dist(p, q));
      h = std::max(h, best);
    }
    CHECK(std::abs(d.convert_to<double>() - h) < 1e-12);
  }
}
