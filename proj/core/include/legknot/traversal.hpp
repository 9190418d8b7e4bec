// Oriented traversal of a Morse word.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "legknot/word.hpp"

namespace legknot {

/// One pass of the traversal through a crossing event.
///
/// The lower line of a crossing at slot k is the one entering at k and
/// leaving at k+1 (it climbs from lower left to upper right); the upper line
/// descends from k+1 to k.
struct Passage {
  std::size_t event;
  bool lower_line;
};

struct Traversal {
  /// direction[g][p-1] is +1 if the strand at slot p in gap g is traversed
  /// rightwards, -1 if leftwards, 0 if it was never reached.
  std::vector<std::vector<std::int8_t>> direction;
  /// Crossing passages in traversal order starting at the base point.
  std::vector<Passage> passages;
  bool single_component = false;

  int dir(std::size_t gap, int slot) const { return direction[gap][slot - 1]; }
};

/// Walks the curve from the base point (first event, lower branch, heading
/// right). Requires strand bookkeeping to be valid; does not require a single
/// component.
Traversal traverse(std::span<const Event> events);

/// Orientation data of a crossing event at index i.
struct CrossingGeometry {
  int lower_dir;  ///< direction of the lower (climbing) line
  int upper_dir;  ///< direction of the upper (descending) line
};

CrossingGeometry crossing_geometry(const Traversal& t, std::span<const Event> events,
                                   std::size_t i);

/// True if the over-strand of crossing i is the lower (climbing) line.
///
/// Diagram crossings: sign = z-component sign of (over x under), so the lower
/// line is over iff sign == -lower_dir * upper_dir. Front crossings: the line
/// of lesser slope is over, which is always the upper (descending) line.
bool lower_line_over(const Traversal& t, std::span<const Event> events, std::size_t i);

/// Sign of a front crossing under the lesser-slope-over convention.
int front_crossing_sign(const Traversal& t, std::span<const Event> events, std::size_t i);

/// Direction of the lower branch at a Birth or Death event.
int turn_lower_dir(const Traversal& t, std::span<const Event> events, std::size_t i);

}  // namespace legknot
