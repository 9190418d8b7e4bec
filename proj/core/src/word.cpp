#include "legknot/word.hpp"

#include <charconv>

#include "legknot/traversal.hpp"

namespace legknot {

namespace {

bool allowed(EventKind k, WordKind w) {
  switch (w) {
    case WordKind::Front:
      return k == EventKind::Birth || k == EventKind::Death || k == EventKind::FrontCross;
    case WordKind::Diagram:
      return k == EventKind::Birth || k == EventKind::Death || k == EventKind::CrossPos ||
             k == EventKind::CrossNeg;
    case WordKind::Singular:
      return k != EventKind::FrontCross;
  }
  return false;
}

struct Spelling {
  std::string_view prefix;
  EventKind kind;
};

// Longest prefixes first so that "Cup" is not shadowed by a shorter match.
constexpr Spelling kFrontTokens[] = {
    {"L", EventKind::Birth}, {"R", EventKind::Death}, {"X", EventKind::FrontCross}};
constexpr Spelling kDiagramTokens[] = {{"Cup", EventKind::Birth},
                                       {"Cap", EventKind::Death},
                                       {"Xp", EventKind::CrossPos},
                                       {"Xn", EventKind::CrossNeg},
                                       {"Xd", EventKind::DoublePoint}};

std::vector<Event> parse_tokens(std::string_view text, WordKind kind) {
  std::vector<Event> events;
  if (text.empty()) throw ParseError("empty word", 0);
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(' ', pos), text.size());
    const std::string_view tok = text.substr(pos, end - pos);
    if (tok.empty()) throw ParseError("empty token", pos);

    const Spelling* match = nullptr;
    if (kind == WordKind::Front) {
      for (const auto& s : kFrontTokens)
        if (tok.substr(0, s.prefix.size()) == s.prefix) match = &s;
    } else {
      for (const auto& s : kDiagramTokens)
        if (tok.substr(0, s.prefix.size()) == s.prefix) match = &s;
    }
    if (match == nullptr) throw ParseError("unknown token '" + std::string(tok) + "'", pos);

    const std::string_view digits = tok.substr(match->prefix.size());
    if (digits.empty() || digits.front() == '0')
      throw ParseError("bad slot in token '" + std::string(tok) + "'", pos);
    int slot = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), slot);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("bad slot in token '" + std::string(tok) + "'", pos);
    if (!allowed(match->kind, kind))
      throw ParseError("token '" + std::string(tok) + "' not allowed here", pos);

    events.push_back({match->kind, slot});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return events;
}

}  // namespace

std::vector<int> strand_counts(std::span<const Event> events) {
  std::vector<int> counts;
  counts.reserve(events.size() + 1);
  int n = 0;
  counts.push_back(n);
  for (const auto& e : events) {
    n += strand_delta(e.kind);
    counts.push_back(n);
  }
  return counts;
}

void validate_events(std::span<const Event> events, WordKind kind) {
  if (events.empty()) throw ValidationError("word has no events");
  int n = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    const auto where = [&] { return "event " + std::to_string(i) + " (" + token(e, kind) + ")"; };
    if (!allowed(e.kind, kind)) throw ValidationError(where() + ": kind not allowed");
    if (e.slot < 1) throw ValidationError(where() + ": slot must be positive");
    if (e.kind == EventKind::Birth) {
      if (e.slot > n + 1) throw ValidationError(where() + ": slot out of range");
    } else if (e.slot + 1 > n) {
      throw ValidationError(where() + ": slot out of range (" + std::to_string(n) +
                            " strands)");
    }
    n += strand_delta(e.kind);
    if (n == 0 && i + 1 != events.size())
      throw ValidationError(where() + ": curve closes before the end of the word");
  }
  if (n != 0) throw ValidationError("strands do not close up at the end of the word");
  if (!traverse(events).single_component)
    throw ValidationError("word has more than one component");
}

std::string token(const Event& e, WordKind kind) {
  std::string_view p;
  if (kind == WordKind::Front) {
    switch (e.kind) {
      case EventKind::Birth: p = "L"; break;
      case EventKind::Death: p = "R"; break;
      case EventKind::FrontCross: p = "X"; break;
      default: p = "?"; break;
    }
  } else {
    switch (e.kind) {
      case EventKind::Birth: p = "Cup"; break;
      case EventKind::Death: p = "Cap"; break;
      case EventKind::CrossPos: p = "Xp"; break;
      case EventKind::CrossNeg: p = "Xn"; break;
      case EventKind::DoublePoint: p = "Xd"; break;
      default: p = "?"; break;
    }
  }
  return std::string(p) + std::to_string(e.slot);
}

std::string serialize(std::span<const Event> events, WordKind kind) {
  std::string out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i) out += ' ';
    out += token(events[i], kind);
  }
  return out;
}

FrontWord parse_front(std::string_view text) {
  return FrontWord(parse_tokens(text, WordKind::Front));
}

DiagramWord parse_diagram(std::string_view text) {
  return DiagramWord(parse_tokens(text, WordKind::Diagram));
}

SingularDiagramWord parse_singular(std::string_view text) {
  return SingularDiagramWord(parse_tokens(text, WordKind::Singular));
}

SingularDiagramWord as_singular(const DiagramWord& d) {
  return SingularDiagramWord(d.events());
}

}  // namespace legknot
