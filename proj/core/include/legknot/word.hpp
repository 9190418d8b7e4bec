// Morse-event encodings of Legendrian fronts and planar knot diagrams.
//
// A word is read left to right as a sweep of a vertical line across the
// picture. Between two consecutive events the line meets a fixed number of
// strands, numbered 1..n from the bottom. Every event acts on one or two
// adjacent strands, addressed by its 1-based slot:
//
//   Birth(k)   left turn (front: left cusp, diagram: cup); new strands k, k+1
//   Death(k)   right turn (front: right cusp, diagram: cap); joins k and k+1
//   Cross(k)   strands k and k+1 exchange places
//
// The first event is always Birth(1). The traversal of the closed curve starts
// there and leaves along the lower branch towards the right; this fixes the
// orientation of every word.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legknot {

enum class EventKind : std::uint8_t {
  Birth,
  Death,
  CrossPos,
  CrossNeg,
  DoublePoint,
  FrontCross,
};

struct Event {
  EventKind kind;
  int slot;

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

constexpr bool is_crossing(EventKind k) {
  return k == EventKind::CrossPos || k == EventKind::CrossNeg ||
         k == EventKind::DoublePoint || k == EventKind::FrontCross;
}

constexpr int strand_delta(EventKind k) {
  switch (k) {
    case EventKind::Birth: return 2;
    case EventKind::Death: return -2;
    default: return 0;
  }
}

/// +1 / -1 for signed diagram crossings, 0 otherwise.
constexpr int crossing_sign(EventKind k) {
  if (k == EventKind::CrossPos) return 1;
  if (k == EventKind::CrossNeg) return -1;
  return 0;
}

enum class WordKind : std::uint8_t { Front, Diagram, Singular };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text. `position` is the 0-based byte offset of the offending
/// token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed tokens that do not describe a single closed curve.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Checks strand bookkeeping, permitted event kinds and the single-component
/// condition. Throws ValidationError.
void validate_events(std::span<const Event> events, WordKind kind);

/// Number of strands in each gap; entry g lies between events g-1 and g.
std::vector<int> strand_counts(std::span<const Event> events);

template <WordKind K>
class Word {
 public:
  static constexpr WordKind kind = K;

  /// Validates; throws ValidationError.
  explicit Word(std::vector<Event> events) : events_(std::move(events)) {
    validate_events(events_, K);
  }

  const std::vector<Event>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }

  int crossing_count() const {
    int n = 0;
    for (const auto& e : events_) n += is_crossing(e.kind) ? 1 : 0;
    return n;
  }

  int double_point_count() const {
    int n = 0;
    for (const auto& e : events_) n += e.kind == EventKind::DoublePoint ? 1 : 0;
    return n;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Event> events_;
};

using FrontWord = Word<WordKind::Front>;
using DiagramWord = Word<WordKind::Diagram>;
using SingularDiagramWord = Word<WordKind::Singular>;

FrontWord parse_front(std::string_view text);
DiagramWord parse_diagram(std::string_view text);
SingularDiagramWord parse_singular(std::string_view text);

/// Token spelling for a single event in the given word kind.
std::string token(const Event& e, WordKind kind);

std::string serialize(std::span<const Event> events, WordKind kind);

template <WordKind K>
std::string to_string(const Word<K>& w) {
  return serialize(w.events(), K);
}

/// A nonsingular diagram viewed as a singular one with no double points.
SingularDiagramWord as_singular(const DiagramWord& d);

}  // namespace legknot
