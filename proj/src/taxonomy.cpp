#include "kochbilliard/taxonomy.hpp"

#include <algorithm>
#include <map>

namespace kb {
namespace {

bool lexLess(const ExactVec& a, const ExactVec& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

bool lexLess(const std::vector<ExactVec>& a, const std::vector<ExactVec>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const ExactVec& p, const ExactVec& q) { return lexLess(p, q); });
}

// Least rotation of the cycle or of its reversal.
std::vector<ExactVec> canonicalCycle(std::vector<ExactVec> c) {
  std::vector<ExactVec> best = c;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      std::vector<ExactVec> rot(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
      rot.insert(rot.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
      if (lexLess(rot, best)) best = std::move(rot);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

ExactVec pt(Rational x, Rational ySqrt3) { return ExactVec(QSqrt3(x), QSqrt3(0, ySqrt3)); }

const std::array<ExactVec, 3>& deltaVertices() {
  static const std::array<ExactVec, 3> v{ExactVec(0, 0), ExactVec(1, 0), pt(Rational(1, 2), Rational(1, 2))};
  return v;
}

std::array<ExactVec, 3> fagnanoMidpoints() {
  const auto& v = deltaVertices();
  return {(v[0] + v[1]) / QSqrt3(2), (v[1] + v[2]) / QSqrt3(2), (v[2] + v[0]) / QSqrt3(2)};
}

ExactVec midpoint(const ExactPolygon& p, std::size_t side) { return (p.sideStart(side) + p.sideEnd(side)) / QSqrt3(2); }

// Depth-first splice: the footprint point p of level k becomes, one level
// down, a ghost midpoint the orbit crosses twice around a Fagnano triangle of
// the new cell.
void expand(const ExactVec& p, int k, int n, const ExactVec& uin, const ExactVec& uout, std::vector<ExactVec>& out) {
  if (k == n) {
    out.push_back(p);
    return;
  }
  Rational ell(1, 2);
  for (int i = 0; i <= k; ++i) ell /= 3;
  const QSqrt3 l(ell);
  ExactVec a = p + l * uin;
  ExactVec b = p - l * uout;
  ExactVec uab = (b - a) / l;
  expand(a, k + 1, n, uin, uab, out);
  expand(b, k + 1, n, uab, uout, out);
}

}  // namespace

InducedCondition induceCondition(const PrefractalTable& table, const InitialCondition<QSqrt3>& source) {
  const ExactPolygon& poly = table.polygon;
  const ExactVec& x0 = source.basepoint;
  const ExactVec& d = source.direction;
  if (norm2(d) != QSqrt3(1)) throw Error(ErrorCode::InvalidArgument, "source direction must be a unit vector");
  std::optional<Locus> on;
  try {
    on = classifyBasepoint(poly, x0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::LineMissesTable, "source basepoint lies outside KS_" + std::to_string(table.level));
  }
  InducedCondition out;
  out.level = table.level;
  out.condition = source;
  if (on && pointsInward(poly, *on, d)) {
    out.locus = *on;
  } else {
    if (on && !pointsInward(poly, *on, -d)) {
      throw Error(ErrorCode::LineMissesTable, "the line only grazes the boundary at the basepoint");
    }
    CollisionEvent<QSqrt3> back = step(poly, PhaseState<QSqrt3>{x0, -d, on});
    if (!pointsInward(poly, back.locus, d)) {
      throw Error(ErrorCode::InternalConsistency, "induced direction does not point into the table");
    }
    out.condition.basepoint = back.point;
    out.locus = back.locus;
  }
  out.startsAtVertex = out.locus.kind == LocusKind::Vertex;
  return out;
}

InitialCondition<QSqrt3> gammaCondition(const PrefractalTable& table, std::size_t side) {
  const ExactPolygon& p = table.polygon;
  ExactVec u = p.sideDirection(side) / QSqrt3(table.sideLength());
  return {midpoint(p, side), rotate(u, 2), AngleMultipleOfPi6{2, side}};
}

GammaEnumeration enumerateGamma(const PrefractalTable& table, std::size_t maxEvents) {
  GammaEnumeration g;
  g.level = table.level;
  const std::size_t n = table.sideCount();
  g.pathClass.resize(n);
  auto cmp = [](const std::vector<ExactVec>& a, const std::vector<ExactVec>& b) { return lexLess(a, b); };
  std::map<std::vector<ExactVec>, std::size_t, decltype(cmp)> classes(cmp);
  for (std::size_t i = 0; i < n; ++i) {
    g.orbits.push_back(simulate(table.polygon, gammaCondition(table, i), maxEvents));
    const ExactOrbit& o = g.orbits.back();
    if (o.status != OrbitStatus::Periodic) {
      // not a closed path: a class of its own
      g.pathClass[i] = g.representatives.size();
      g.representatives.push_back(i);
      continue;
    }
    auto [it, fresh] = classes.try_emplace(canonicalCycle(footprint(o)), g.representatives.size());
    if (fresh) g.representatives.push_back(i);
    g.pathClass[i] = it->second;
  }
  return g;
}

std::vector<std::size_t> deltaSides(const PrefractalTable& table) {
  const auto& v = deltaVertices();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.sideCount(); ++i) {
    ExactVec m = midpoint(table.polygon, i);
    for (int s = 0; s < 3; ++s) {
      if (onSegment(m, v[s], v[(s + 1) % 3])) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

FagnanoCollection fagnanoCollection(const PrefractalTable& table, std::size_t maxEvents) {
  return fagnanoCollection(table, enumerateGamma(table, maxEvents));
}

FagnanoCollection fagnanoCollection(const PrefractalTable& table, const GammaEnumeration& gamma) {
  FagnanoCollection f;
  f.level = table.level;
  f.sides = deltaSides(table);
  std::vector<bool> member(table.sideCount(), false);
  std::vector<std::size_t> classes;
  for (std::size_t i : f.sides) {
    member[i] = true;
    f.orbits.push_back(gamma.orbits.at(i));
    classes.push_back(gamma.pathClass.at(i));
  }
  std::sort(classes.begin(), classes.end());
  f.distinctPaths = static_cast<std::size_t>(std::unique(classes.begin(), classes.end()) - classes.begin());
  std::optional<QSqrt3> minF;
  for (std::size_t i = 0; i < gamma.orbits.size(); ++i) {
    const ExactOrbit& o = gamma.orbits[i];
    if (o.status != OrbitStatus::Periodic) continue;
    std::optional<QSqrt3>& slot = member[i] ? minF : f.minOtherLength;
    if (!slot || o.length < *slot) slot = o.length;
  }
  if (minF) f.minLength = *minF;
  f.shortestInGamma = minF && (!f.minOtherLength || *minF <= *f.minOtherLength);
  return f;
}

InitialCondition<QSqrt3> fagnanoSource() { return {pt(Rational(1, 2), 0), unitDirection(2), AngleMultipleOfPi6{2, 0}}; }

ExactOrbit ppfBySimulation(int n, std::size_t maxEvents) {
  PrefractalTable t = buildKS(n);
  InducedCondition ic = induceCondition(t, fagnanoSource());
  ExactOrbit o = simulate(t.polygon, ic.condition, maxEvents);
  if (o.status != OrbitStatus::Periodic) {
    throw Error(ErrorCode::NotPeriodic, "ppF_" + std::to_string(n) + " did not close: " + name(o.status));
  }
  return o;
}

Similarity Similarity::inverse() const {
  // linear = r O with O orthogonal, so linear^-1 = linear^T / r^2
  QSqrt3 r2 = ratio2();
  Mat2 t = linear.transpose();
  Mat2 inv{t.a / r2, t.b / r2, t.c / r2, t.d / r2};
  return {inv, -(inv * translation)};
}

IFSSystem ppfIFS() {
  const auto& v = deltaVertices();
  IFSSystem s;
  const QSqrt3 third(Rational(-1, 3));
  for (int i = 0; i < 3; ++i) {
    ExactVec u = v[(i + 1) % 3] - v[i];
    // rotation by the side angle plus pi, scaled by 1/3, base onto the ghost
    Mat2 m{third * u.x, -(third * u.y), third * u.y, third * u.x};
    ExactVec ghostEnd = v[i] + QSqrt3(Rational(2, 3)) * u;
    s.cellMaps[i] = {m, ghostEnd};
  }
  for (int i = 0; i < 3; ++i) {
    Similarity inv = s.cellMaps[i].inverse();
    for (int j = 0; j < 2; ++j) s.subsystems[i][j] = s.cellMaps[i] * s.cellMaps[j + 1] * inv;
  }
  return s;
}

PPFConstruction ppfByIFS(int n) {
  if (n < 0 || n > kMaxSnowflakeLevel) throw Error(ErrorCode::LevelAboveBudget, "ppfByIFS level out of range");
  PPFConstruction c;
  c.level = n;
  const std::array<ExactVec, 3> m = fagnanoMidpoints();
  std::array<ExactVec, 3> dir;
  for (int k = 0; k < 3; ++k) dir[k] = (m[(k + 1) % 3] - m[k]) / QSqrt3(Rational(1, 2));
  // start after the base midpoint so the list ends where the induced
  // simulation starts
  for (int k : {1, 2, 0}) expand(m[k], 0, n, dir[(k + 2) % 3], dir[k], c.footprint);

  if (n > 0) {
    // the splice must reproduce the IFS attractor approximation: two side
    // midpoints of every depth-n cell
    IFSSystem ifs = ppfIFS();
    std::vector<ExactVec> fromMaps;
    for (int i = 0; i < 3; ++i) {
      std::vector<Similarity> cellsAtDepth{ifs.cellMaps[i]};
      for (int k = 1; k < n; ++k) {
        std::vector<Similarity> next;
        for (const Similarity& f : ifs.subsystems[i]) {
          for (const Similarity& s : cellsAtDepth) next.push_back(f * s);
        }
        cellsAtDepth = std::move(next);
      }
      for (const Similarity& s : cellsAtDepth) {
        fromMaps.push_back(s.apply(m[1]));
        fromMaps.push_back(s.apply(m[2]));
      }
    }
    std::vector<ExactVec> spliced = c.footprint;
    auto less = [](const ExactVec& a, const ExactVec& b) { return lexLess(a, b); };
    std::sort(spliced.begin(), spliced.end(), less);
    std::sort(fromMaps.begin(), fromMaps.end(), less);
    if (spliced != fromMaps) throw Error(ErrorCode::InternalConsistency, "IFS cells and spliced chronology disagree");
  }
  for (std::size_t k = 0; k < c.footprint.size(); ++k) {
    c.segments.push_back({c.footprint[k], c.footprint[(k + 1) % c.footprint.size()]});
  }
  return c;
}

bool sameCycle(const std::vector<ExactVec>& a, const std::vector<ExactVec>& b) {
  if (a.size() != b.size()) return false;
  return canonicalCycle(a) == canonicalCycle(b);
}

const char* name(OrbitClass c) {
  switch (c) {
    case OrbitClass::Gamma: return "Gamma";
    case OrbitClass::Fagnano: return "Fagnano";
    case OrbitClass::PrimaryPiecewiseFagnano: return "PrimaryPiecewiseFagnano";
    case OrbitClass::NonGammaPeriodic: return "NonGammaPeriodic";
    case OrbitClass::SingularAcute: return "SingularAcute";
    case OrbitClass::SingularObtuse: return "SingularObtuse";
    case OrbitClass::Quasiperiodic: return "Quasiperiodic";
  }
  return "?";
}

OrbitClass classifyOrbit(const PrefractalTable& table, const ExactOrbit& orbit) {
  if (orbit.status == OrbitStatus::HitNonremovable) return OrbitClass::SingularObtuse;
  std::optional<Locus> start = classifyBasepoint(table.polygon, orbit.initial.basepoint);
  bool acute = false;
  if (start && start->kind == LocusKind::Vertex) {
    if (start->vertexKind == VertexKind::Obtuse) return OrbitClass::SingularObtuse;
    acute = true;
  }
  for (const auto& e : orbit.events) acute = acute || e.locus.kind == LocusKind::Vertex;
  if (acute) return OrbitClass::SingularAcute;
  if (orbit.status == OrbitStatus::Exhausted) return OrbitClass::Quasiperiodic;

  if (sameCycle(footprint(orbit), ppfByIFS(table.level).footprint)) return OrbitClass::PrimaryPiecewiseFagnano;
  // a gamma orbit passes some side midpoint at pi/3 or 2pi/3 to the side
  const QSqrt3 half(Rational(1, 2));
  const QSqrt3 len(table.sideLength());
  std::optional<std::size_t> gammaSide;
  for (const auto& e : orbit.events) {
    std::size_t i = e.locus.id;
    if (e.point != midpoint(table.polygon, i)) continue;
    if (abs(dot(*e.outgoing, table.polygon.sideDirection(i))) == half * len) {
      gammaSide = i;
      break;
    }
  }
  if (!gammaSide) return OrbitClass::NonGammaPeriodic;
  std::vector<std::size_t> ds = deltaSides(table);
  return std::find(ds.begin(), ds.end(), *gammaSide) != ds.end() ? OrbitClass::Fagnano : OrbitClass::Gamma;
}

CompatibleSequence compatibleSequence(const InitialCondition<QSqrt3>& source, int nMax, std::size_t maxEvents) {
  CompatibleSequence seq;
  seq.source = source;
  for (int n = 0; n <= nMax; ++n) {
    PrefractalTable t = buildKS(n);
    seq.induced.push_back(induceCondition(t, source));
    seq.orbits.push_back(simulate(t.polygon, seq.induced.back().condition, maxEvents));
    seq.labels.push_back(classifyOrbit(t, seq.orbits.back()));
  }
  return seq;
}

std::optional<long> oddPeriodCheck(const ExactOrbit& orbit) {
  if (orbit.status != OrbitStatus::Periodic || orbit.period % 2 == 0 || orbit.period % 3 != 0) return std::nullopt;
  std::array<ExactVec, 3> m = fagnanoMidpoints();
  std::vector<ExactVec> expected(m.begin(), m.end());
  std::sort(expected.begin(), expected.end(), [](const ExactVec& a, const ExactVec& b) { return lexLess(a, b); });
  if (footprintSet(orbit) != expected) return std::nullopt;
  const long q = static_cast<long>(orbit.period / 3);
  if (orbit.length != QSqrt3(Rational(3 * q, 2))) return std::nullopt;
  return (q - 1) / 2;
}

Real footprintVsCantor(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  PrecisionScope scope(200);
  const auto& v = deltaVertices();
  // Cantor interval endpoints carried to the sides with the same address;
  // at depth 0 the address is a side of the triangle itself
  std::vector<ExactVec> cantor;
  if (n == 0) {
    cantor.assign(v.begin(), v.end());
  } else {
    IFSSystem ifs = ppfIFS();
    for (int i = 0; i < 3; ++i) {
      std::vector<Similarity> leaves{ifs.cellMaps[i]};
      for (int k = 1; k < n; ++k) {
        std::vector<Similarity> next;
        for (const Similarity& s : leaves) {
          next.push_back(s * ifs.cellMaps[1]);
          next.push_back(s * ifs.cellMaps[2]);
        }
        leaves = std::move(next);
      }
      for (const Similarity& s : leaves) {
        for (int side = 1; side <= 2; ++side) {
          cantor.push_back(s.apply(v[side]));
          cantor.push_back(s.apply(v[(side + 1) % 3]));
        }
      }
    }
  }
  ExactOrbit ppf = ppfBySimulation(n, 16 * 3 * (std::size_t{1} << n) + 16);
  std::vector<ApproxVec> a, b;
  for (const ExactVec& p : footprintSet(ppf)) a.push_back(toApprox(p));
  for (const ExactVec& p : cantor) b.push_back(toApprox(p));
  auto directed = [](const std::vector<ApproxVec>& from, const std::vector<ApproxVec>& to) {
    Real worst = 0;
    for (const ApproxVec& p : from) {
      Real best = norm2(p - to.front());
      for (const ApproxVec& q : to) best = std::min(best, Real(norm2(p - q)));
      worst = std::max(worst, best);
    }
    return worst;
  };
  Real d2 = std::max(directed(a, b), directed(b, a));
  return boost::multiprecision::sqrt(d2);
}

}  // namespace kb
