// Fronts as pseudo-Legendrian diagrams.
#pragma once

#include "legknot/moves.hpp"
#include "legknot/word.hpp"

namespace legknot {

/// Cusps become cups and caps, front crossings keep their sign, and every
/// right cusp is preceded by a compensating kink on its lower branch: (-1,-1)
/// for an upward cusp, (1,-1) for a downward one. The result has writhe equal
/// to tb_front(f) and Whitney rotation equal to rot_front(f).
DiagramWord front_to_diagram(const FrontWord& f);

/// Where an arc of f ends up in front_to_diagram(f).
Location map_front_location(const FrontWord& f, Location at);

}  // namespace legknot
