// Random and exhaustive word generation for property tests and benchmarks.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "legknot/word.hpp"

namespace legknot {

struct RandomWordOptions {
  int max_crossings = 12;
  int max_strands = 6;
  /// Singular words only: exact number of double points (in addition to the
  /// ordinary crossings).
  int double_points = 0;
};

DiagramWord random_diagram(std::mt19937_64& rng, const RandomWordOptions& opts);
FrontWord random_front(std::mt19937_64& rng, const RandomWordOptions& opts);
SingularDiagramWord random_singular(std::mt19937_64& rng, const RandomWordOptions& opts);

struct EnumerationBounds {
  /// Crossing events of any kind, double points included.
  int max_crossings = 6;
  /// Birth events, the base point included.
  int max_births = 2;
  /// Exact double point count; 0 for plain diagram words.
  int double_points = 0;
};

/// Calls `visit` with every valid single-component word within the bounds,
/// in lexicographic event order. Ordinary crossings are CrossPos or CrossNeg.
void enumerate_words(const EnumerationBounds& bounds,
                     const std::function<void(const std::vector<Event>&)>& visit);

std::vector<SingularDiagramWord> enumerate_singular(const EnumerationBounds& bounds);
std::vector<DiagramWord> enumerate_diagrams(const EnumerationBounds& bounds);

/// Named examples used across tests and the CLI.
FrontWord unknot_front();             // L1 R1
FrontWord right_trefoil_front();      // tb 1, rot 0
DiagramWord unknot_diagram();         // Cup1 Cap1
DiagramWord right_trefoil_diagram();  // front_to_diagram(right_trefoil_front())
DiagramWord left_trefoil_diagram();
DiagramWord figure_eight_diagram();

}  // namespace legknot
