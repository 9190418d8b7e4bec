// Bounded bidirectional search for isotopy certificates.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "legknot/moves.hpp"
#include "legknot/word.hpp"

namespace legknot {

/// Lexicographically least word reachable by Commute moves (event 0 stays
/// put). Idempotent; equal for commutation-equivalent words.
DiagramWord canonical_form(const DiagramWord& w);

/// canonical_form, also returning the Commute indices that realize it.
DiagramWord canonical_form(const DiagramWord& w, std::vector<std::size_t>& swaps);

/// Normal form of the events strictly between the first `prefix` and the
/// last `suffix` events, which stay untouched (prefix >= 1).
DiagramWord canonical_form(const DiagramWord& w, std::size_t prefix, std::size_t suffix,
                           std::vector<std::size_t>& swaps);

struct SearchBudget {
  int max_crossings = 12;
  /// Counted in Reidemeister moves (R2, R3). Commutation classes are single
  /// states and the other planar moves are free, bounded by max_events.
  int max_depth = 8;
  std::size_t max_states = 400000;
  /// Longest word visited. 0 means the longer endpoint plus `extra_events`.
  int max_events = 0;
  int extra_events = 2;
  /// Likewise for crossings: the effective bound is the smaller of
  /// max_crossings and the more crossed endpoint plus extra_crossings.
  int extra_crossings = 2;
  /// Margins tried around the part where the two words differ; the shared
  /// prefix and suffix outside it stay frozen. A negative entry means the
  /// whole word. Stages share the state budget.
  std::vector<int> windows{0, 2, -1};
};

enum class Outcome { Equivalent, NotEquivalent, Inconclusive };

std::string to_string(Outcome o);

struct SearchResult {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<MoveTrace> trace;
  std::size_t states_visited = 0;
  /// For NotEquivalent: the separating invariant.
  std::string reason;
};

/// Breadth-first from both ends over commutation classes, using the moves
/// that preserve the pseudo-Legendrian class (no R1). Pairs separated by
/// writhe, Whitney rotation, v2 or v3 are reported NotEquivalent without
/// searching. Moves are first confined to a window around the part where a
/// and b differ (an isotopy of that tangle with its ends fixed), then the
/// window grows as listed in the budget.
SearchResult search_equivalent(const DiagramWord& a, const DiagramWord& b,
                               const SearchBudget& budget);

/// Search with the first `prefix` and last `suffix` events of both words held
/// fixed (an isotopy of the tangle in between, rel its ends). The words must
/// share those events. Budget windows are ignored.
SearchResult search_tangle(const DiagramWord& a, const DiagramWord& b, std::size_t prefix,
                           std::size_t suffix, const SearchBudget& budget);

/// stabilize(stabilize(d, s1), s2) against stabilize(d, s1 + s2). Both sides
/// are d with a run of kinks after the base point. The kink run on the left
/// is rewritten into the one on the right by adjacent swaps and cancellations,
/// each certified once on the unknot and carried into place; direct search is
/// the fallback.
SearchResult verify_stab_commute(const DiagramWord& d, StabVector s1, StabVector s2,
                                 const SearchBudget& budget);

/// Given a certificate for a ~ b, certifies stabilize(a, s) ~ stabilize(b, s).
/// The kinks sit on the arc leaving the base point, which no move touches, so
/// the certificate is carried over with shifted event indices; search is the
/// fallback. Throws MoveError if `trace` does not certify a ~ b.
SearchResult verify_stab_transport(const DiagramWord& a, const DiagramWord& b, StabVector s,
                                   const MoveTrace& trace, const SearchBudget& budget);

}  // namespace legknot
