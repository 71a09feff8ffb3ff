#include "kochbilliard/snowflake.hpp"

#include <algorithm>
#include <climits>

namespace kb {
namespace {

const RationalAngle kAcute{1, 3};
const RationalAngle kObtuse{4, 3};

struct Thirds {
  ExactVec first;  // a + (b - a) / 3
  ExactVec second;
  ExactVec apex;   // outward bump tip
};

Thirds thirds(const ExactVec& a, const ExactVec& b) {
  ExactVec step = (b - a) / QSqrt3(3);
  Thirds t;
  t.first = a + step;
  t.second = t.first + step;
  // the interior is on the left, so the bump turns right by 60 degrees
  t.apex = t.first + rotate(step, -2);
  return t;
}

Rational pow3(int n) {
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

Rational PrefractalTable::sideLength() const { return Rational(1) / pow3(level); }

const ExactPolygon& unitTriangle() {
  static const ExactPolygon tri(
      {ExactVec(0, 0), ExactVec(1, 0), ExactVec(QSqrt3(Rational(1, 2)), QSqrt3(0, Rational(1, 2)))},
      {kAcute, kAcute, kAcute});
  return tri;
}

PrefractalTable buildKS(int level, int maxLevel) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
  if (level > maxLevel) {
    throw Error(ErrorCode::LevelAboveBudget,
                "level " + std::to_string(level) + " exceeds budget " + std::to_string(maxLevel));
  }
  std::vector<ExactVec> vs = unitTriangle().vertices();
  std::vector<RationalAngle> as = unitTriangle().angles();
  for (int l = 0; l < level; ++l) {
    std::vector<ExactVec> next;
    std::vector<RationalAngle> nextAngles;
    next.reserve(vs.size() * 4);
    nextAngles.reserve(vs.size() * 4);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Thirds t = thirds(vs[i], vs[(i + 1) % vs.size()]);
      next.push_back(vs[i]);
      nextAngles.push_back(as[i]);
      next.push_back(t.first);
      nextAngles.push_back(kObtuse);
      next.push_back(t.apex);
      nextAngles.push_back(kAcute);
      next.push_back(t.second);
      nextAngles.push_back(kObtuse);
    }
    vs = std::move(next);
    as = std::move(nextAngles);
  }
  return PrefractalTable{level, ExactPolygon(std::move(vs), std::move(as))};
}

GhostSet ghostSet(int level) {
  PrefractalTable t = buildKS(level);
  GhostSet g{level, {}};
  g.ghosts.reserve(t.sideCount());
  for (std::size_t i = 0; i < t.sideCount(); ++i) {
    Thirds th = thirds(t.polygon.sideStart(i), t.polygon.sideEnd(i));
    g.ghosts.push_back({th.first, th.second});
  }
  return g;
}

std::vector<Cell> cells(int level) {
  if (level < 1) throw Error(ErrorCode::NoCells, "KS_0 has no cells");
  PrefractalTable parent = buildKS(level - 1);
  std::vector<Cell> out;
  out.reserve(parent.sideCount());
  for (std::size_t i = 0; i < parent.sideCount(); ++i) {
    Thirds th = thirds(parent.polygon.sideStart(i), parent.polygon.sideEnd(i));
    out.push_back(Cell{level, i, {th.first, th.second, th.apex}, {th.first, th.second}});
  }
  return out;
}

std::vector<Segment> intersectWithDelta(int level) {
  PrefractalTable t = buildKS(level);
  const ExactPolygon& tri = unitTriangle();
  std::vector<Segment> out;
  for (std::size_t i = 0; i < t.sideCount(); ++i) {
    const ExactVec& a = t.polygon.sideStart(i);
    const ExactVec& b = t.polygon.sideEnd(i);
    for (std::size_t k = 0; k < 3; ++k) {
      if (onSegment(a, tri.sideStart(k), tri.sideEnd(k)) && onSegment(b, tri.sideStart(k), tri.sideEnd(k))) {
        out.push_back({a, b});
        break;
      }
    }
  }
  return out;
}

TilingEmbedding embedInTiling(const PrefractalTable& table, bool enumerateTriangles) {
  TilingEmbedding e;
  e.level = table.level;
  const QSqrt3 unit(Rational(1) / pow3(table.level));
  e.basis = {ExactVec(unit, QSqrt3(0)), unit * unitDirection(2)};
  // v = i e1 + j e2  =>  j = y / (unit * sqrt3/2),  i = x / unit - j / 2
  auto solve = [&](const ExactVec& v) {
    QSqrt3 j = v.y / e.basis[1].y;
    QSqrt3 i = v.x / unit - j / QSqrt3(2);
    auto integral = [](const QSqrt3& s) { return s.isRational() && s.a().get_den() == 1 && s.a().get_num().fits_slong_p(); };
    if (!integral(i) || !integral(j)) {
      throw Error(ErrorCode::InternalConsistency, "vertex is not a lattice point of the tiling");
    }
    return LatticeCoord{i.a().get_num().get_si(), j.a().get_num().get_si()};
  };
  e.vertexCoords.reserve(table.sideCount());
  long imin = LONG_MAX, imax = LONG_MIN, jmin = LONG_MAX, jmax = LONG_MIN;
  for (const auto& v : table.polygon.vertices()) {
    LatticeCoord c = solve(v);
    e.vertexCoords.push_back(c);
    imin = std::min(imin, c.i);
    imax = std::max(imax, c.i);
    jmin = std::min(jmin, c.j);
    jmax = std::max(jmax, c.j);
  }
  if (!enumerateTriangles) return e;
  const QSqrt3 third(Rational(1, 3));
  const QSqrt3 twoThirds(Rational(2, 3));
  for (long j = jmin; j < jmax; ++j) {
    for (long i = imin - (jmax - jmin); i < imax; ++i) {
      for (bool up : {true, false}) {
        QSqrt3 ci = QSqrt3(i) + (up ? third : twoThirds);
        QSqrt3 cj = QSqrt3(j) + (up ? third : twoThirds);
        ExactVec centroid = ci * e.basis[0] + cj * e.basis[1];
        if (containsStrictly(table.polygon, centroid)) e.triangles.push_back({i, j, up});
      }
    }
  }
  return e;
}

}  // namespace kb
