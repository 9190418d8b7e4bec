// Moves on Morse words: planar isotopy, R2/R3, Legendrian front moves,
// kinks, cusp pairs and (i, j)-stabilization.
//
// Event 0 (the base point) is never moved, removed or preceded by an
// insertion. Local moves elsewhere keep the same arc leaving the base point,
// so every result keeps the orientation of its source.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legknot/word.hpp"

namespace legknot {

class MoveError : public Error {
 public:
  using Error::Error;
};

/// (rotation increment, self-linking increment) of a one-crossing curl.
struct KinkType {
  int rotation;
  int writhe;

  static constexpr KinkType pp() { return {1, 1}; }
  static constexpr KinkType pn() { return {1, -1}; }
  static constexpr KinkType nn() { return {-1, -1}; }
  static constexpr KinkType np() { return {-1, 1}; }

  friend bool operator==(const KinkType&, const KinkType&) = default;
};

/// The four kink types, in the order (1,1), (1,-1), (-1,-1), (-1,1).
constexpr KinkType kAllKinkTypes[] = {KinkType::pp(), KinkType::pn(), KinkType::nn(),
                                      KinkType::np()};

/// A point on an arc: the strand at `slot` in the gap just before event
/// `index` (index == size() is not an arc since the last gap is empty).
struct Location {
  std::size_t index;
  int slot;

  friend bool operator==(const Location&, const Location&) = default;
};

struct StabVector {
  int i = 0;
  int j = 0;

  friend StabVector operator+(StabVector a, StabVector b) { return {a.i + b.i, a.j + b.j}; }
  friend bool operator==(const StabVector&, const StabVector&) = default;
};

enum class MoveKind : std::uint8_t {
  Commute,
  CupCapCancel,
  CupCapIntroUp,
  CupCapIntroDown,
  CupCapSlide,
  R2IntroPN,
  R2IntroNP,
  R2Elim,
  R3,
  FrontMoveIIntroUp,
  FrontMoveIIntroDown,
  FrontMoveIElim,
  FrontMoveIIExpand,
  FrontMoveIIContract,
  FrontMoveIII,
  KinkInsert,
  KinkCancelPair,
  CuspPairInsert,
};

/// `index`/`slot` address events for removals and rearrangements and a
/// Location for insertions. `param` carries the kink type index (into
/// kAllKinkTypes) for KinkInsert and the cusp type (1 or 2) for CuspPairInsert.
struct Move {
  MoveKind kind;
  std::size_t index;
  int slot = 0;
  int param = 0;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string move_kind_name(const Move& m);
/// `<kind> <event-index> <slot>`.
std::string to_string(const Move& m);
Move parse_move(std::string_view line);

/// True for the moves that realize an isotopy without R1 (commutation, cup/cap
/// moves, R2, R3).
bool is_regular_isotopy(MoveKind k);

/// Moves enumerated in canonical order (kind, index, slot). Diagram words get
/// planar, R2 and R3 moves; fronts get commutation and the three Legendrian
/// front moves. Kink and cusp-pair moves are never enumerated.
std::vector<Move> applicable_moves(const DiagramWord& w);
std::vector<Move> applicable_moves(const FrontWord& w);

/// Throws MoveError when m does not apply.
DiagramWord apply_move(const DiagramWord& w, const Move& m);
FrontWord apply_move(const FrontWord& w, const Move& m);

/// The move that undoes m applied to w, as a move on apply_move(w, m).
Move inverse_move(const DiagramWord& w, const Move& m);

/// Swaps events i and i+1 when they act on separated strands.
std::optional<std::pair<Event, Event>> commuted(const Event& first, const Event& second);

DiagramWord insert_kink(const DiagramWord& d, KinkType t, Location at);

/// Kink type of the curl occupying events i..i+2, if there is one.
std::optional<KinkType> kink_at(const DiagramWord& d, std::size_t i);

/// Adds the kinks of the (i, j)-stabilization on the arc leaving the base
/// point: i kinks (1,1) (or |i| kinks (-1,-1)), then j kinks (-1,1) (or |j|
/// kinks (1,-1)).
DiagramWord stabilize(const DiagramWord& d, StabVector s);
SingularDiagramWord stabilize(const SingularDiagramWord& d, StabVector s);

/// Adds a zigzag of two cusps. Type 1 lowers the Maslov number by one,
/// type 2 raises it by one; both lower tb by one.
FrontWord insert_cusp_pair(const FrontWord& f, int type, Location at);

/// Adds a curl next to a crossing or double point, on the arc at `at`.
SingularDiagramWord insert_singular_kink(const SingularDiagramWord& d, KinkType t,
                                         Location at);

/// Moves the curl at events kink..kink+2 to the other side of the adjacent
/// double point. Throws MoveError if there is no curl there or no double point
/// next to it on the same strand.
SingularDiagramWord pull_kink_through_double_point(const SingularDiagramWord& d,
                                                   std::size_t kink);

/// A replayable isotopy certificate.
struct MoveTrace {
  DiagramWord start;
  std::vector<Move> moves;
  DiagramWord end;
};

/// Applies the moves in order; throws MoveError on the first bad move.
DiagramWord replay(const DiagramWord& start, const std::vector<Move>& moves);
bool verify(const MoveTrace& t);

std::string serialize_moves(const std::vector<Move>& moves);
std::vector<Move> parse_moves(std::string_view text);

}  // namespace legknot
