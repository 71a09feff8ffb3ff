#pragma once

#include <vector>

#include "kochbilliard/billiard.hpp"
#include "kochbilliard/isometry.hpp"
#include "kochbilliard/snowflake.hpp"

namespace kb {

/// An orbit developed into a straight line by reflecting copies of the table
/// across each collision side. An acute corner contributes its wedge copies
/// (n reflections for a pi/n corner), so the development stays straight.
struct UnfoldedOrbit {
  std::vector<PlanarIsometry> copies;  // copies[0] is the table itself
  /// eventCopy[k]: the copy holding leg k (leg 0 starts at the basepoint,
  /// leg k > 0 starts at event k).
  std::vector<std::size_t> eventCopy;
  /// Basepoint, then each developed event point; for a periodic orbit with an
  /// interior basepoint, the developed return to the basepoint comes last.
  std::vector<ExactVec> developedPoints;
  Segment chord;

  QSqrt3 chordLength2() const { return norm2(chord.b - chord.a); }
};

/// Throws CannotUnfold for an empty orbit or one that stops at an obtuse
/// vertex before its last event.
UnfoldedOrbit unfoldOrbit(const ExactPolygon& table, const ExactOrbit& orbit);

/// Exact second witness for periodicity: the terminal copy carries the
/// basepoint onto the developed line with the initial direction.
bool isPeriodicByUnfolding(const ExactPolygon& table, const ExactOrbit& orbit);

/// Linear parts generated by the reflections in the table's sides.
std::vector<Mat2> reflectionGroup(const ExactPolygon& table);

/// Two periodic orbits are equivalent when some unfolding of one is a
/// translate of an unfolding of the other with the same length: equal period
/// and length, and a group element and cyclic shift matching the developed
/// reflection sequence and the chord direction.
bool equivalentOrbits(const ExactPolygon& table, const ExactOrbit& o1, const ExactOrbit& o2);

}  // namespace kb
