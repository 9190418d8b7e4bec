// Classical and low-order finite-type invariants.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legknot/gauss.hpp"
#include "legknot/word.hpp"

namespace legknot {

/// Sum of crossing signs (the blackboard self-linking number).
int writhe(const DiagramWord& d);

/// Turning number of the immersed planar curve. Each cup or cap contributes
/// +1/2 when turned counterclockwise and -1/2 otherwise; crossings contribute
/// nothing. Double points are ignored, so singular words are accepted too.
int whitney_rotation(const DiagramWord& d);
int whitney_rotation(const SingularDiagramWord& d);

/// Thurston-Bennequin number: signed crossings (lesser slope over) minus half
/// the number of cusps.
int tb_front(const FrontWord& f);

/// Rotation (Maslov) number: (down cusps - up cusps) / 2.
int rot_front(const FrontWord& f);

struct CuspCounts {
  int up = 0;
  int down = 0;
};
CuspCounts count_cusps(const FrontWord& f);

/// Arrow diagram used as a Gauss-diagram formula term. `ends` lists the 2m
/// endpoints in circle order starting after the base point; each entry names
/// the arrow (0..m-1) and whether this endpoint is the tail. Arrows point from
/// the over-passage to the under-passage.
struct ArrowDiagram {
  struct End {
    int arrow;
    bool tail;
  };
  std::vector<End> ends;
  bool based = true;
};

/// Sum over all subdiagrams of g isomorphic to a (respecting the base point
/// when a.based) of the product of chord signs.
long long arrow_pairing(const ArrowDiagram& a, const GaussDiagram& g);

/// Order-2 invariant; 0 on the unknot and 1 on either trefoil.
int v2(const DiagramWord& d);
int v2(const GaussDiagram& g);

/// Order-3 invariant; odd under mirror image, 1 on the right-handed trefoil.
int v3(const DiagramWord& d);
int v3(const GaussDiagram& g);

struct InvariantValue {
  std::string name;
  int value;

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

/// Every applicable invariant, in the fixed order writhe, rotation, tb, maslov,
/// v2, v3. Fronts also report the invariants of their diagram.
std::vector<InvariantValue> invariant_report(const FrontWord& f);
std::vector<InvariantValue> invariant_report(const DiagramWord& d);
std::vector<InvariantValue> invariant_report(const SingularDiagramWord& d);

}  // namespace legknot
