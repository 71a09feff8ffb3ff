#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "kochbilliard/polygon.hpp"

namespace kb {

/// Symbolic angle tags carried along with a direction for reporting.
struct AngleMultipleOfPi6 {
  long k = 0;            // angle k * pi / 6
  std::size_t side = 0;  // measured from this side's direction
};
struct AngleRadians {
  long a = 0;
  long b = 1;  // angle a / b radians
};
using AngleLabel = std::variant<AngleMultipleOfPi6, AngleRadians>;

template <class S>
struct InitialCondition {
  Point2<S> basepoint;
  /// In the exact kernel the direction must be a unit vector, so that ray
  /// parameters are path lengths.
  Vec2<S> direction;
  std::optional<AngleLabel> label;
};

enum class LocusKind { SideInterior, Vertex };

struct Locus {
  LocusKind kind = LocusKind::SideInterior;
  std::size_t id = 0;  // side id or vertex id
  VertexKind vertexKind = VertexKind::Acute;

  static Locus side(std::size_t i) { return {LocusKind::SideInterior, i, VertexKind::Acute}; }
  static Locus vertex(std::size_t i, VertexKind k) { return {LocusKind::Vertex, i, k}; }
  friend bool operator==(const Locus&, const Locus&) = default;
};

template <class S>
struct CollisionEvent {
  std::size_t index = 0;  // 1-based
  Point2<S> point;
  Locus locus;
  Vec2<S> incoming;
  std::optional<Vec2<S>> outgoing;  // absent at obtuse vertices
  S cumulativeLength{};
};

enum class OrbitStatus { Periodic, HitNonremovable, Exhausted };
const char* name(OrbitStatus s);

template <class S>
struct OrbitRecord {
  InitialCondition<S> initial;
  std::vector<CollisionEvent<S>> events;
  OrbitStatus status = OrbitStatus::Exhausted;
  std::size_t period = 0;      // Periodic
  S length{};                  // Periodic: length of one period; otherwise total length so far
  std::size_t vertexId = 0;    // HitNonremovable
  std::size_t maxEvents = 0;   // Exhausted
  bool candidateOnly = false;  // approximate kernel: periodicity matched within tolerance only
  bool toleranceDependent = false;  // approximate kernel: some hit was snapped to a vertex
};

using ExactOrbit = OrbitRecord<QSqrt3>;
using ExactCollisionEvent = CollisionEvent<QSqrt3>;
using ApproxOrbit = OrbitRecord<Real>;

struct EngineOptions {
  int snapExponent = -60;    // vertex snap: 2^snapExponent of a side length
  int periodExponent = -80;  // approximate periodicity tolerance
};

/// Where a phase state sits: strictly inside, or on the boundary.
template <class S>
struct PhaseState {
  Point2<S> point;
  Vec2<S> direction;
  std::optional<Locus> on;  // nullopt for interior points
};

/// Boundary locus of a point for either kernel (the approximate kernel
/// matches within the snap tolerance). nullopt means interior; throws
/// InvalidArgument for exterior points.
template <class S>
std::optional<Locus> classifyBasepoint(const Polygon<S>& table, const Point2<S>& p, const EngineOptions& opt = {});

/// True when d points strictly into the table from the boundary locus.
template <class S>
bool pointsInward(const Polygon<S>& table, const Locus& at, const Vec2<S>& d);

/// Acute-corner continuation: the image of the incoming direction under the
/// composite of the n alternating wall reflections of a pi/n corner. For pi/3
/// this is "reverse, then reflect across the bisector".
template <class S>
Vec2<S> cornerContinue(std::size_t vertexId, const Vec2<S>& incoming, const Polygon<S>& table);

/// Next boundary collision from a phase state.
template <class S>
CollisionEvent<S> step(const Polygon<S>& table, const PhaseState<S>& state, const EngineOptions& opt = {});

template <class S>
OrbitRecord<S> simulate(const Polygon<S>& table, const InitialCondition<S>& ic, std::size_t maxEvents,
                        const EngineOptions& opt = {});

/// Chronological event points.
template <class S>
std::vector<Point2<S>> footprint(const OrbitRecord<S>& o);

/// Distinct event points in lexicographic order.
std::vector<ExactVec> footprintSet(const ExactOrbit& o);

}  // namespace kb
