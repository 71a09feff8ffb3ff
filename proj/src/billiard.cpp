#include "kochbilliard/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace kb {
namespace {

template <class S>
constexpr bool kExact = std::is_same_v<S, QSqrt3>;

template <class S>
S tolerance(int exponent) {
  if constexpr (kExact<S>) {
    return S(0);
  } else {
    return boost::multiprecision::ldexp(Real(1), exponent);
  }
}

template <class S>
S length(const Vec2<S>& v) {
  if constexpr (kExact<S>) {
    // only called on unit directions and on ray parameters
    throw Error(ErrorCode::InternalConsistency, "exact length requested");
  } else {
    return boost::multiprecision::sqrt(norm2(v));
  }
}

template <class S>
bool near(const Vec2<S>& a, const Vec2<S>& b, const S& tol) {
  if constexpr (kExact<S>) {
    return a == b;
  } else {
    return norm2(a - b) <= tol * tol;
  }
}

template <class S>
struct StepResult {
  CollisionEvent<S> event;
  S leg{};
  bool snapped = false;
};

template <class S>
StepResult<S> stepImpl(const Polygon<S>& table, const PhaseState<S>& state, const EngineOptions& opt) {
  const std::size_t n = table.size();
  std::size_t skipA = n, skipB = n;
  if (state.on) {
    if (state.on->kind == LocusKind::SideInterior) {
      skipA = state.on->id;
    } else {
      skipA = table.prevSide(state.on->id);
      skipB = state.on->id;
    }
  }

  // Double-precision prefilter: keep every side the ray might meet, with
  // generous slack, then decide exactly among those.
  const double ox = toDouble(state.point.x), oy = toDouble(state.point.y);
  const double dx = toDouble(state.direction.x), dy = toDouble(state.direction.y);
  const auto& xs = table.approxXs();
  const auto& ys = table.approxYs();
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == skipA || j == skipB) continue;
    std::size_t k = (j + 1) % n;
    double ex = xs[k] - xs[j], ey = ys[k] - ys[j];
    double denom = dx * ey - dy * ex;
    double scale = std::hypot(dx, dy) * std::hypot(ex, ey);
    if (std::abs(denom) <= 1e-9 * scale) {
      candidates.push_back(j);
      continue;
    }
    double wx = xs[j] - ox, wy = ys[j] - oy;
    double t = (wx * ey - wy * ex) / denom;
    double s = (wx * dy - wy * dx) / denom;
    if (t > -1e-9 && s > -1e-6 && s < 1 + 1e-6) candidates.push_back(j);
  }

  const S snap = tolerance<S>(opt.snapExponent);
  std::optional<RayHit<S>> best;
  std::size_t bestSide = n;
  bool vertexTie = false;
  std::size_t tieVertex = 0;
  auto vertexOf = [&](const RayHit<S>& h, std::size_t j) { return h.end == SegmentEnd::Start ? j : (j + 1) % n; };
  for (std::size_t j : candidates) {
    std::optional<RayHit<S>> h;
    try {
      h = raySegmentIntersect(state.point, state.direction, table.sideStart(j), table.sideEnd(j), snap);
    } catch (const Error& e) {
      // collinear with this side: its endpoint is reported by the adjacent side
      if (e.code() != ErrorCode::DegenerateOverlap) throw;
      continue;
    }
    if (!h) continue;
    if (!best || h->rayParam < best->rayParam) {
      best = h;
      bestSide = j;
      vertexTie = h->end != SegmentEnd::None;
      if (vertexTie) tieVertex = vertexOf(*h, j);
    } else if (sign(h->rayParam - best->rayParam) == 0 && h->end != SegmentEnd::None && !vertexTie) {
      vertexTie = true;
      tieVertex = vertexOf(*h, j);
    }
  }
  if (!best) throw Error(ErrorCode::NoProgress, "no forward collision found");

  StepResult<S> r;
  CollisionEvent<S>& ev = r.event;
  ev.incoming = state.direction;
  if (vertexTie) {
    std::size_t v = tieVertex;
    ev.point = table.vertex(v);
    ev.locus = Locus::vertex(v, table.kind(v));
    if (ev.locus.vertexKind == VertexKind::Acute) ev.outgoing = cornerContinue(v, state.direction, table);
    // a floating-point vertex hit is always a snap decision
    r.snapped = !kExact<S>;
  } else {
    ev.point = best->point;
    ev.locus = Locus::side(bestSide);
    ev.outgoing = reflectDirection(state.direction, table.sideDirection(bestSide));
  }
  if constexpr (kExact<S>) {
    r.leg = best->rayParam;
  } else {
    r.leg = best->rayParam * length(state.direction);
  }
  ev.cumulativeLength = r.leg;
  return r;
}

}  // namespace

const char* name(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Periodic:
      return "periodic";
    case OrbitStatus::HitNonremovable:
      return "hit-nonremovable";
    case OrbitStatus::Exhausted:
      return "exhausted";
  }
  return "?";
}

template <class S>
std::optional<Locus> classifyBasepoint(const Polygon<S>& table, const Point2<S>& p, const EngineOptions& opt) {
  const S tol = tolerance<S>(opt.snapExponent);
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (norm2(p - table.vertex(i)) <= tol * tol * norm2(table.sideDirection(i))) return Locus::vertex(i, table.kind(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec2<S> e = table.sideDirection(i);
    Vec2<S> w = p - table.sideStart(i);
    using std::abs;
    S len2 = norm2(e);
    if (abs(cross(e, w)) <= tol * len2) {
      S d = dot(w, e);
      if (sign(d) >= 0 && d <= len2) return Locus::side(i);
    }
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = table.sideStart(i);
    const auto& b = table.sideEnd(i);
    if ((a.y > p.y) == (b.y > p.y)) continue;
    S x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (x > p.x) inside = !inside;
  }
  if (!inside) throw Error(ErrorCode::InvalidArgument, "basepoint lies outside the table");
  return std::nullopt;
}

template <class S>
bool pointsInward(const Polygon<S>& table, const Locus& at, const Vec2<S>& d) {
  if (at.kind == LocusKind::SideInterior) return sign(cross(table.sideDirection(at.id), d)) > 0;
  Vec2<S> out = table.sideDirection(at.id);
  Vec2<S> backIn = -table.sideDirection(table.prevSide(at.id));
  if (sign(cross(out, backIn)) > 0) return sign(cross(out, d)) > 0 && sign(cross(d, backIn)) > 0;
  // reflex corner: inward unless d lies in the closed exterior cone
  return !(sign(cross(backIn, d)) >= 0 && sign(cross(d, out)) >= 0);
}

template <class S>
Vec2<S> cornerContinue(std::size_t vertexId, const Vec2<S>& incoming, const Polygon<S>& table) {
  const RationalAngle& a = table.angle(vertexId);
  if (a.m != 1) {
    throw Error(ErrorCode::ObtuseVertex, "vertex " + std::to_string(vertexId) + " is not removable");
  }
  const Vec2<S> walls[2] = {table.sideDirection(vertexId), table.sideDirection(table.prevSide(vertexId))};
  Vec2<S> d = incoming;
  for (long k = 0; k < a.n; ++k) d = reflectDirection(d, walls[k % 2]);
  return d;
}

template <class S>
CollisionEvent<S> step(const Polygon<S>& table, const PhaseState<S>& state, const EngineOptions& opt) {
  return stepImpl(table, state, opt).event;
}

template <class S>
OrbitRecord<S> simulate(const Polygon<S>& table, const InitialCondition<S>& ic, std::size_t maxEvents,
                        const EngineOptions& opt) {
  if (ic.direction.isZero()) throw Error(ErrorCode::ZeroVector, "initial direction is zero");
  OrbitRecord<S> rec;
  rec.initial = ic;
  Vec2<S> d0 = ic.direction;
  if constexpr (kExact<S>) {
    if (norm2(d0) != S(1)) throw Error(ErrorCode::InvalidArgument, "exact directions must be unit vectors");
  } else {
    d0 = d0 / length(d0);
    rec.initial.direction = d0;
  }
  const Point2<S>& x0 = ic.basepoint;
  std::optional<Locus> on = classifyBasepoint(table, x0, opt);
  if (on && !pointsInward(table, *on, d0)) {
    throw Error(ErrorCode::InvalidArgument, "direction does not point into the table");
  }
  rec.maxEvents = maxEvents;
  rec.length = S(0);
  if (maxEvents == 0) return rec;

  const S tol = tolerance<S>(opt.periodExponent);
  PhaseState<S> state{x0, d0, on};
  S total(0);
  std::optional<StepResult<S>> pending;
  for (std::size_t k = 1; k <= maxEvents; ++k) {
    StepResult<S> r = pending ? std::move(*pending) : stepImpl(table, state, opt);
    pending.reset();
    rec.toleranceDependent = rec.toleranceDependent || r.snapped;
    total += r.leg;
    r.event.index = k;
    r.event.cumulativeLength = total;
    rec.events.push_back(r.event);
    const CollisionEvent<S>& ev = rec.events.back();
    if (!ev.outgoing) {
      rec.status = OrbitStatus::HitNonremovable;
      rec.vertexId = ev.locus.id;
      rec.length = total;
      return rec;
    }
    state = PhaseState<S>{ev.point, *ev.outgoing, ev.locus};
    if (!near(*ev.outgoing, d0, tol)) continue;
    if (on) {
      if (!near(ev.point, x0, tol)) continue;
      rec.status = OrbitStatus::Periodic;
      rec.period = k;
      rec.length = total;
      rec.candidateOnly = !kExact<S>;
      return rec;
    }
    // interior basepoint: the state recurs if x0 lies on the next leg
    Vec2<S> w = x0 - ev.point;
    using std::abs;
    if (!(abs(cross(w, d0)) <= tol) || sign(dot(w, d0)) <= 0) continue;
    pending = stepImpl(table, state, opt);
    S toX0 = dot(w, d0);
    if (toX0 < pending->leg) {
      rec.status = OrbitStatus::Periodic;
      rec.period = k;
      rec.length = total + toX0;
      rec.candidateOnly = !kExact<S>;
      return rec;
    }
  }
  rec.status = OrbitStatus::Exhausted;
  rec.length = total;
  return rec;
}

template <class S>
std::vector<Point2<S>> footprint(const OrbitRecord<S>& o) {
  std::vector<Point2<S>> pts;
  pts.reserve(o.events.size());
  for (const auto& e : o.events) pts.push_back(e.point);
  return pts;
}

std::vector<ExactVec> footprintSet(const ExactOrbit& o) {
  std::vector<ExactVec> pts = footprint(o);
  auto less = [](const ExactVec& a, const ExactVec& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

#define KB_INSTANTIATE(S)                                                                                        \
  template std::optional<Locus> classifyBasepoint(const Polygon<S>&, const Point2<S>&, const EngineOptions&);     \
  template bool pointsInward(const Polygon<S>&, const Locus&, const Vec2<S>&);                                    \
  template Vec2<S> cornerContinue(std::size_t, const Vec2<S>&, const Polygon<S>&);                                \
  template CollisionEvent<S> step(const Polygon<S>&, const PhaseState<S>&, const EngineOptions&);                 \
  template OrbitRecord<S> simulate(const Polygon<S>&, const InitialCondition<S>&, std::size_t, const EngineOptions&); \
  template std::vector<Point2<S>> footprint(const OrbitRecord<S>&);

KB_INSTANTIATE(QSqrt3)
KB_INSTANTIATE(Real)
#undef KB_INSTANTIATE

}  // namespace kb
