// Based, signed Gauss diagrams.
#pragma once

#include <vector>

#include "legknot/word.hpp"

namespace legknot {

/// One crossing seen on the parameter circle. Endpoints are positions
/// 0..2n-1 counted along the traversal from the base point.
struct Chord {
  int over_end;
  int under_end;
  int sign;

  friend bool operator==(const Chord&, const Chord&) = default;
};

struct GaussDiagram {
  /// Always 0: positions are already measured from the base point.
  int base_point = 0;
  std::vector<Chord> chords;

  int endpoint_count() const { return 2 * static_cast<int>(chords.size()); }
  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;
};

/// One chord per crossing event, in order of first visit.
GaussDiagram diagram_to_gauss(const DiagramWord& d);

/// The same diagram with the base point moved forward by `shift` positions.
GaussDiagram rebase(const GaussDiagram& g, int shift);

}  // namespace legknot
