#include "kochbilliard/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace kb {
namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Hit {
  QSqrt3 t;
  ExactVec point;
  bool vertex = false;
  std::size_t id = 0;
};

// First boundary point on the ray q + t u, t > 0. Sides through the current
// boundary position are skipped; a shared endpoint is reported as a vertex.
Hit nextHit(const ExactPolygon& p, const ExactVec& q, const ExactVec& u, const std::optional<Locus>& on) {
  const std::size_t n = p.size();
  std::size_t skipA = n, skipB = n;
  if (on) {
    skipA = on->kind == LocusKind::SideInterior ? on->id : p.prevSide(on->id);
    if (on->kind == LocusKind::Vertex) skipB = on->id;
  }
  std::optional<Hit> best;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == skipA || j == skipB) continue;
    std::optional<RayHit<QSqrt3>> h;
    try {
      h = raySegmentIntersect(q, u, p.sideStart(j), p.sideEnd(j));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateOverlap) throw;
      continue;
    }
    if (!h) continue;
    if (best && !(h->rayParam < best->t)) continue;
    Hit hit{h->rayParam, h->point, h->end != SegmentEnd::None, j};
    if (h->end == SegmentEnd::End) hit.id = (j + 1) % n;
    best = hit;
  }
  if (!best) throw Error(ErrorCode::NoProgress, "straight-line flow found no boundary crossing");
  return *best;
}

}  // namespace

RationalAngleSpec RationalAngleSpec::from(std::vector<RationalAngle> angles) {
  if (angles.size() < 3) throw Error(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
  RationalAngleSpec spec;
  Rational total(0);
  for (RationalAngle& a : angles) {
    a = makeAngle(a.m, a.n);
    spec.N = std::lcm(spec.N, a.n);
    total += Rational(a.m, a.n);
  }
  total.canonicalize();
  if (total != Rational(static_cast<long>(angles.size()) - 2)) {
    throw Error(ErrorCode::InvalidArgument, "interior angles do not sum to (r - 2) pi");
  }
  spec.angles = std::move(angles);
  return spec;
}

DihedralElement FlatSurfaceModel::compose(const DihedralElement& a, const DihedralElement& b) const {
  return {mod(a.k + a.s * b.k, spec.N), a.s * b.s};
}

DihedralElement FlatSurfaceModel::sideReflection(std::size_t side) const {
  return {mod(sideAngleIndex[side], spec.N), -1};
}

std::size_t FlatSurfaceModel::gluedCopy(std::size_t copy, std::size_t side) const {
  return copyIndex(compose(copies[copy], sideReflection(side)));
}

std::pair<long, bool> coneAngle(const RationalAngleSpec& spec, std::size_t vertexId) {
  if (vertexId >= spec.angles.size()) throw Error(ErrorCode::InvalidArgument, "no such vertex");
  long m = spec.angles[vertexId].m;
  return {m, m == 1};
}

FlatSurfaceModel buildSurface(const RationalAngleSpec& spec) {
  FlatSurfaceModel s;
  s.spec = spec;
  const long N = spec.N;
  const std::size_t r = spec.angles.size();

  // side directions in units of pi/N: turning at vertex i is pi minus its angle
  s.sideAngleIndex.assign(r, 0);
  for (std::size_t i = 1; i < r; ++i) {
    const RationalAngle& a = spec.angles[i];
    s.sideAngleIndex[i] = s.sideAngleIndex[i - 1] + N - N / a.n * a.m;
  }

  for (int sgn : {1, -1}) {
    for (long k = 0; k < N; ++k) s.copies.push_back({k, sgn});
  }
  const std::size_t copies = s.copies.size();

  auto edgeDirection = [&](std::size_t c, std::size_t i) {
    const DihedralElement& g = s.copies[c];
    return mod(g.s * s.sideAngleIndex[i] + 2 * g.k, 2 * N);
  };
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t partner = s.gluedCopy(c, i);
      if (partner == c || s.gluedCopy(partner, i) != c) {
        throw Error(ErrorCode::InternalConsistency, "edge gluing is not a perfect matching");
      }
      long delta = mod(edgeDirection(c, i) - edgeDirection(partner, i), 2 * N);
      if (delta != 0 && delta != N) throw Error(ErrorCode::InternalConsistency, "glued edges are not translates");
      if (c < partner) s.identifications.push_back({{c, i}, {partner, i}});
    }
  }

  // corner (c, j) is glued across side j and side j - 1
  UnionFind uf(copies * r);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t prev = (j + r - 1) % r;
      uf.unite(c * r + j, s.gluedCopy(c, j) * r + j);
      uf.unite(c * r + j, s.gluedCopy(c, prev) * r + j);
    }
  }
  std::vector<std::size_t> classOfRoot(copies * r, SIZE_MAX);
  s.cornerClass.resize(copies * r);
  for (std::size_t idx = 0; idx < copies * r; ++idx) {
    std::size_t root = uf.find(idx);
    if (classOfRoot[root] == SIZE_MAX) {
      classOfRoot[root] = s.classVertex.size();
      s.classVertex.push_back(idx % r);
    }
    s.cornerClass[idx] = classOfRoot[root];
  }

  long coneExcess = 0;  // sum of (m_j - 1) over cone points
  for (std::size_t j = 0; j < r; ++j) {
    const RationalAngle& a = spec.angles[j];
    long mult = N / a.n;
    long found = static_cast<long>(std::count(s.classVertex.begin(), s.classVertex.end(), j));
    if (found != mult) throw Error(ErrorCode::InternalConsistency, "cone point count differs from N / n_j");
    s.conePoints.push_back({j, a.m, a.m == 1, mult});
    coneExcess += (a.m - 1) * mult;
  }

  s.vertexCount = static_cast<long>(s.classVertex.size());
  s.edgeCount = static_cast<long>(s.identifications.size());
  s.faceCount = static_cast<long>(copies);
  s.eulerCharacteristic = s.vertexCount - s.edgeCount + s.faceCount;
  if (s.eulerCharacteristic % 2 != 0) throw Error(ErrorCode::InternalConsistency, "odd Euler characteristic");
  s.genus = 1 - s.eulerCharacteristic / 2;
  // Gauss-Bonnet: sum (2 pi m - 2 pi) = 2 pi (2g - 2)
  if (coneExcess != 2 * s.genus - 2) throw Error(ErrorCode::InternalConsistency, "Gauss-Bonnet check failed");

  for (std::size_t c = 0; c < r; ++c) {
    const RationalAngle& a = spec.angles[c];
    if (a.m != 1 || a.n != N) continue;
    const RationalAngle& next = spec.angles[(c + 1) % r];
    const RationalAngle& prev = spec.angles[(c + r - 1) % r];
    auto notStraight = [](const RationalAngle& x, long times) { return times * x.m != x.n; };
    std::size_t corners = 0;
    corners += notStraight(next, 2) ? N : 0;
    corners += notStraight(prev, 2) ? N : 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == c || j == (c + 1) % r || j == (c + r - 1) % r) continue;
      if (notStraight(spec.angles[j], 1)) corners += 2 * N;
    }
    s.generalizedPolygonCorners = corners;
    break;
  }
  return s;
}

FlatSurfaceModel buildSurface(const ExactPolygon& polygon) {
  ExactPolygon derived = makeExactPolygon(polygon.vertices());
  FlatSurfaceModel s = buildSurface(RationalAngleSpec::from(derived.angles()));
  s.polygon = derived;

  // exact matrices for the copies: BFS over words in the side reflections
  std::vector<std::optional<Mat2>> mats(s.copyCount());
  mats[0] = Mat2::identity();
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s.sideCount(); ++i) {
      std::size_t h = s.gluedCopy(c, i);
      Mat2 m = *mats[c] * Mat2::reflection(derived.sideDirection(i));
      if (!mats[h]) {
        mats[h] = m;
        queue.push_back(h);
      } else if (*mats[h] != m) {
        throw Error(ErrorCode::InternalConsistency, "copy matrices disagree with the dihedral labels");
      }
    }
  }
  for (auto& m : mats) {
    if (!m) throw Error(ErrorCode::InternalConsistency, "copy not reachable by side reflections");
    s.copyMatrices.push_back(*m);
  }

  s.referenceVector = ExactVec(QSqrt3(1), QSqrt3(0, Rational(1, 1000)));
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (sign(cross(s.referenceVector, derived.sideDirection(i))) == 0) {
      throw Error(ErrorCode::InternalConsistency, "reference vector parallel to a side");
    }
  }
  for (const Mat2& m : s.copyMatrices) s.copyOrientations.push_back(m * s.referenceVector);
  return s;
}

SurfacePath straightLineFlow(const FlatSurfaceModel& surface, const FlowStart& start, std::size_t maxCrossings) {
  if (!surface.polygon) throw Error(ErrorCode::InvalidArgument, "flow needs a surface built from an exact polygon");
  const ExactPolygon& poly = *surface.polygon;
  if (start.copy >= surface.copyCount()) throw Error(ErrorCode::InvalidArgument, "no such copy");
  if (norm2(start.direction) != QSqrt3(1)) throw Error(ErrorCode::InvalidArgument, "direction must be a unit vector");
  std::optional<Locus> startOn = classifyBasepoint(poly, start.point);
  if (startOn && !pointsInward(poly, *startOn, start.direction)) {
    throw Error(ErrorCode::InvalidArgument, "direction does not point into the copy");
  }

  SurfacePath path;
  path.start = start;
  const ExactVec D = surface.copyMatrices[start.copy] * start.direction;
  path.developedDirection = D;
  path.length = QSqrt3(0);

  std::size_t g = start.copy;
  PlanarIsometry placement{surface.copyMatrices[g], ExactVec(0, 0)};
  ExactVec q = start.point;
  std::optional<Locus> on = startOn;
  std::optional<Hit> pending;
  const std::size_t r = surface.sideCount();

  for (std::size_t k = 0; k < maxCrossings; ++k) {
    ExactVec u = surface.copyMatrices[g].transpose() * D;
    Hit hit = pending ? *pending : nextHit(poly, q, u, on);
    pending.reset();
    path.length += hit.t;
    SurfaceCrossing x;
    x.fromCopy = g;
    x.point = hit.point;
    x.developedPoint = placement.apply(hit.point);
    x.id = hit.id;
    if (hit.vertex) {
      const ConePoint& cone = surface.conePoints[hit.id];
      if (!cone.removable) {
        x.kind = CrossingKind::NonremovableCone;
        x.toCopy = g;
        x.cumulativeLength = path.length;
        path.crossings.push_back(x);
        path.stoppedAtCone = true;
        return path;
      }
      // the corner of the same cone point whose interior angle contains D
      x.kind = CrossingKind::RemovableCone;
      std::size_t cls = surface.cornerClass[g * r + hit.id];
      std::optional<std::size_t> target;
      for (std::size_t h = 0; h < surface.copyCount(); ++h) {
        if (surface.cornerClass[h * r + hit.id] != cls) continue;
        if (pointsInward(poly, Locus::vertex(hit.id, VertexKind::Acute), surface.copyMatrices[h].transpose() * D)) {
          target = h;
          break;
        }
      }
      if (!target) throw Error(ErrorCode::InternalConsistency, "no corner continues the line through a removable cone");
      Mat2 rel = surface.copyMatrices[g].transpose() * surface.copyMatrices[*target];
      placement = placement * PlanarIsometry{rel, hit.point - rel * hit.point};
      g = *target;
      on = Locus::vertex(hit.id, poly.kind(hit.id));
    } else {
      x.kind = CrossingKind::Edge;
      placement = placement * PlanarIsometry::reflection(poly.sideStart(hit.id), poly.sideDirection(hit.id));
      g = surface.gluedCopy(g, hit.id);
      on = Locus::side(hit.id);
    }
    x.toCopy = g;
    x.cumulativeLength = path.length;
    path.crossings.push_back(x);
    q = hit.point;

    if (g != start.copy) continue;
    if (startOn) {
      if (q == start.point) {
        path.closed = true;
        return path;
      }
      continue;
    }
    ExactVec w = start.point - q;
    if (sign(cross(w, start.direction)) != 0 || sign(dot(w, start.direction)) <= 0) continue;
    pending = nextHit(poly, q, start.direction, on);
    QSqrt3 toStart = dot(w, start.direction);
    if (toStart < pending->t) {
      path.closed = true;
      path.length += toStart;
      return path;
    }
  }
  return path;
}

ExactOrbit projectToBilliard(const FlatSurfaceModel& surface, const SurfacePath& path) {
  if (!surface.polygon) throw Error(ErrorCode::InvalidArgument, "projection needs a surface built from an exact polygon");
  const ExactPolygon& poly = *surface.polygon;
  ExactOrbit o;
  o.initial = {path.start.point, path.start.direction, std::nullopt};
  const ExactVec& x0 = path.start.point;
  const ExactVec& d0 = path.start.direction;
  const bool interiorStart = !classifyBasepoint(poly, x0).has_value();
  for (std::size_t k = 0; k < path.crossings.size(); ++k) {
    const SurfaceCrossing& x = path.crossings[k];
    ExactCollisionEvent e;
    e.index = k + 1;
    e.point = x.point;
    e.locus = x.kind == CrossingKind::Edge ? Locus::side(x.id) : Locus::vertex(x.id, poly.kind(x.id));
    e.incoming = surface.copyMatrices[x.fromCopy].transpose() * path.developedDirection;
    if (x.kind != CrossingKind::NonremovableCone) {
      e.outgoing = surface.copyMatrices[x.toCopy].transpose() * path.developedDirection;
    }
    e.cumulativeLength = x.cumulativeLength;
    o.events.push_back(e);
    if (!e.outgoing) {
      o.status = OrbitStatus::HitNonremovable;
      o.vertexId = x.id;
      o.length = x.cumulativeLength;
      return o;
    }
    // the billiard orbit may close before the surface path does: a copy
    // differing from the start copy by a reflection fixing d0 folds to the
    // same billiard state
    if (*e.outgoing != d0) continue;
    if (!interiorStart) {
      if (e.point != x0) continue;
      o.status = OrbitStatus::Periodic;
      o.period = k + 1;
      o.length = x.cumulativeLength;
      return o;
    }
    ExactVec w = x0 - e.point;
    if (sign(cross(w, d0)) != 0 || sign(dot(w, d0)) <= 0) continue;
    QSqrt3 toStart = dot(w, d0);
    bool before = k + 1 < path.crossings.size() ? toStart < path.crossings[k + 1].cumulativeLength - x.cumulativeLength
                                                : path.closed;
    if (!before) continue;
    o.status = OrbitStatus::Periodic;
    o.period = k + 1;
    o.length = x.cumulativeLength + toStart;
    return o;
  }
  o.status = OrbitStatus::Exhausted;
  o.maxEvents = path.crossings.size();
  o.length = path.crossings.empty() ? QSqrt3(0) : path.crossings.back().cumulativeLength;
  return o;
}

}  // namespace kb
