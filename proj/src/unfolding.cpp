#include "kochbilliard/unfolding.hpp"

#include <algorithm>

namespace kb {
namespace {

// Reflections (in table coordinates) that carry the current copy to the next
// one at an event; the last element gives the new current copy.
std::vector<PlanarIsometry> eventReflections(const ExactPolygon& table, const ExactCollisionEvent& e) {
  if (e.locus.kind == LocusKind::SideInterior) {
    return {PlanarIsometry::reflection(table.sideStart(e.locus.id), table.sideDirection(e.locus.id))};
  }
  std::size_t v = e.locus.id;
  const RationalAngle& a = table.angle(v);
  if (a.m != 1) throw Error(ErrorCode::CannotUnfold, "orbit passes an obtuse vertex");
  // cornerContinue applies R_w0, R_w1, ... to the direction; the copies
  // compose the same reflections in the same order so the line stays straight
  const ExactVec& p = table.vertex(v);
  const ExactVec walls[2] = {table.sideDirection(v), table.sideDirection(table.prevSide(v))};
  std::vector<PlanarIsometry> out;
  for (long k = 0; k < a.n; ++k) out.push_back(PlanarIsometry::reflection(p, walls[k % 2]));
  return out;
}

struct Development {
  std::vector<PlanarIsometry> copies{PlanarIsometry::identity()};
  std::vector<std::size_t> legCopy{0};
  std::vector<ExactVec> points;
};

Development develop(const ExactPolygon& table, const ExactOrbit& orbit, std::size_t repeats) {
  if (orbit.events.empty()) throw Error(ErrorCode::CannotUnfold, "orbit has no events");
  Development d;
  d.points.push_back(orbit.initial.basepoint);
  const std::size_t n = orbit.events.size();
  for (std::size_t r = 0; r < repeats; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const ExactCollisionEvent& e = orbit.events[k];
      const PlanarIsometry current = d.copies[d.legCopy.back()];
      d.points.push_back(current.apply(e.point));
      if (!e.outgoing) {
        if (k + 1 != n || r + 1 != repeats) throw Error(ErrorCode::CannotUnfold, "orbit stops at an obtuse vertex");
        break;
      }
      PlanarIsometry next = current;
      for (const PlanarIsometry& refl : eventReflections(table, e)) {
        next = next * refl;
        d.copies.push_back(next);
      }
      d.legCopy.push_back(d.copies.size() - 1);
    }
  }
  return d;
}

}  // namespace

UnfoldedOrbit unfoldOrbit(const ExactPolygon& table, const ExactOrbit& orbit) {
  Development d = develop(table, orbit, 1);
  UnfoldedOrbit u;
  u.copies = std::move(d.copies);
  u.eventCopy = std::move(d.legCopy);
  u.developedPoints = std::move(d.points);
  if (orbit.status == OrbitStatus::Periodic && !(orbit.events.back().point == orbit.initial.basepoint)) {
    u.developedPoints.push_back(u.copies[u.eventCopy.back()].apply(orbit.initial.basepoint));
  }
  u.chord = {u.developedPoints.front(), u.developedPoints.back()};
  return u;
}

bool isPeriodicByUnfolding(const ExactPolygon& table, const ExactOrbit& orbit) {
  if (orbit.events.empty()) return false;
  for (const auto& e : orbit.events) {
    if (!e.outgoing) return false;
  }
  Development d = develop(table, orbit, 1);
  const PlanarIsometry& last = d.copies[d.legCopy.back()];
  const ExactVec& x0 = orbit.initial.basepoint;
  const ExactVec& d0 = orbit.initial.direction;
  if (last.applyLinear(d0) != d0) return false;
  ExactVec image = last.apply(x0);
  const ExactVec& end = d.points.back();
  if (image == end) return true;
  // interior basepoint: its image must lie ahead on the developed line,
  // before the next collision
  ExactVec w = image - end;
  if (sign(cross(w, d0)) != 0 || sign(dot(w, d0)) <= 0) return false;
  const ExactCollisionEvent& e = orbit.events.back();
  CollisionEvent<QSqrt3> next = step(table, PhaseState<QSqrt3>{e.point, *e.outgoing, e.locus});
  return dot(w, d0) < next.cumulativeLength;
}

std::vector<Mat2> reflectionGroup(const ExactPolygon& table) {
  std::vector<Mat2> gens;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Mat2 r = Mat2::reflection(table.sideDirection(i));
    if (std::find(gens.begin(), gens.end(), r) == gens.end()) gens.push_back(r);
  }
  return generateGroup(gens);
}

bool equivalentOrbits(const ExactPolygon& table, const ExactOrbit& o1, const ExactOrbit& o2) {
  if (o1.status != OrbitStatus::Periodic || o2.status != OrbitStatus::Periodic) return false;
  if (o1.period != o2.period || o1.length != o2.length) return false;
  const std::size_t p = o1.period;
  // developed reflection sequence M_k = L_k L_{k-1}^{-1}; two periods so
  // every cyclic shift has p consecutive terms
  auto sequence = [&](const ExactOrbit& o) {
    Development d = develop(table, o, 2);
    std::vector<Mat2> m;
    for (std::size_t k = 1; k < d.legCopy.size(); ++k) {
      m.push_back(d.copies[d.legCopy[k]].linear * d.copies[d.legCopy[k - 1]].linear.transpose());
    }
    return m;
  };
  std::vector<Mat2> m1 = sequence(o1);
  std::vector<Mat2> m2 = sequence(o2);
  if (m1.size() < 2 * p || m2.size() < p) return false;
  const ExactVec dir2 = canonicalDirection(o2.initial.direction);
  for (const Mat2& h : reflectionGroup(table)) {
    if (canonicalDirection(h * o1.initial.direction) != dir2) continue;
    Mat2 hinv = h.transpose();
    for (std::size_t r = 0; r < p; ++r) {
      bool match = true;
      for (std::size_t k = 0; k < p && match; ++k) match = h * m1[r + k] * hinv == m2[k];
      if (match) return true;
    }
  }
  return false;
}

}  // namespace kb
