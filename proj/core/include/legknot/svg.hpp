// Deterministic SVG pictures of Morse words.
#pragma once

#include <string>

#include "legknot/word.hpp"

namespace legknot {

/// Slots map to heights and events to columns; every coordinate is an
/// integer, so equal words give byte-identical documents. Fronts get sharp
/// cusps, diagrams round cups and caps; under-strands are drawn with a gap and
/// double points with a dot. A small circle marks the base point.
std::string render_svg(const FrontWord& f);
std::string render_svg(const DiagramWord& d);
std::string render_svg(const SingularDiagramWord& d);

}  // namespace legknot
