#include "legknot/moves.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "move_detail.hpp"

namespace legknot {

using detail::Events;

namespace {

// Half-integer spans in doubled coordinates: strand p sits at 2p, the space
// between strands p-1 and p at 2p-1.
struct Span {
  int lo;
  int hi;
};

Span in_span(const Event& e) {
  if (e.kind == EventKind::Birth) return {2 * e.slot - 1, 2 * e.slot - 1};
  return {2 * e.slot, 2 * e.slot + 2};
}

Span out_span(const Event& e) {
  if (e.kind == EventKind::Death) return {2 * e.slot - 1, 2 * e.slot - 1};
  return {2 * e.slot, 2 * e.slot + 2};
}

bool separated(Span a, Span b) { return a.hi < b.lo || b.hi < a.lo; }

bool signed_cross(EventKind k) { return k == EventKind::CrossPos || k == EventKind::CrossNeg; }

struct Names {
  MoveKind kind;
  const char* name;
};

constexpr Names kNames[] = {
    {MoveKind::Commute, "Commute"},
    {MoveKind::CupCapCancel, "CupCapCancel"},
    {MoveKind::CupCapIntroUp, "CupCapIntroUp"},
    {MoveKind::CupCapIntroDown, "CupCapIntroDown"},
    {MoveKind::CupCapSlide, "CupCapSlide"},
    {MoveKind::R2IntroPN, "R2IntroPN"},
    {MoveKind::R2IntroNP, "R2IntroNP"},
    {MoveKind::R2Elim, "R2Elim"},
    {MoveKind::R3, "R3"},
    {MoveKind::FrontMoveIIntroUp, "FrontMoveIIntroUp"},
    {MoveKind::FrontMoveIIntroDown, "FrontMoveIIntroDown"},
    {MoveKind::FrontMoveIElim, "FrontMoveIElim"},
    {MoveKind::FrontMoveIIExpand, "FrontMoveIIExpand"},
    {MoveKind::FrontMoveIIContract, "FrontMoveIIContract"},
    {MoveKind::FrontMoveIII, "FrontMoveIII"},
    {MoveKind::KinkInsert, "KinkInsert"},
    {MoveKind::KinkCancelPair, "KinkCancelPair"},
    {MoveKind::CuspPairInsert, "CuspPairInsert"},
};

// ---------------------------------------------------------------------------
// Shared pattern recognizers. Each returns the replacement for events
// [i, i + removed) or nullopt.

struct Rewrite {
  std::size_t removed;
  std::vector<Event> insert;
};

std::optional<Rewrite> cup_cap_cancel(const Events& ev, std::size_t i) {
  if (i + 1 >= ev.size()) return std::nullopt;
  const Event& a = ev[i];
  const Event& b = ev[i + 1];
  if (a.kind != EventKind::Birth || b.kind != EventKind::Death) return std::nullopt;
  if (a.slot == b.slot + 1 || b.slot == a.slot + 1) return Rewrite{2, {}};
  return std::nullopt;
}

std::optional<Rewrite> slide(const Events& ev, std::size_t i) {
  if (i + 1 >= ev.size()) return std::nullopt;
  const Event& a = ev[i];
  const Event& b = ev[i + 1];
  if (is_crossing(a.kind) && b.kind == EventKind::Death) {
    if (b.slot == a.slot + 1)
      return Rewrite{2, {{a.kind, a.slot + 1}, {EventKind::Death, a.slot}}};
    if (a.slot == b.slot + 1)
      return Rewrite{2, {{a.kind, b.slot}, {EventKind::Death, b.slot + 1}}};
  }
  if (a.kind == EventKind::Birth && is_crossing(b.kind)) {
    if (b.slot == a.slot + 1)
      return Rewrite{2, {{EventKind::Birth, a.slot + 1}, {b.kind, a.slot}}};
    if (a.slot == b.slot + 1)
      return Rewrite{2, {{EventKind::Birth, b.slot}, {b.kind, b.slot + 1}}};
  }
  return std::nullopt;
}

// Triple-point rearrangement: X(k) X(k+1) X(k) <-> X(k+1) X(k) X(k+1). The
// crossing of each strand pair keeps its kind, which reverses the order.
std::optional<Rewrite> triple(const Events& ev, std::size_t i) {
  if (i + 2 >= ev.size()) return std::nullopt;
  const Event& a = ev[i];
  const Event& b = ev[i + 1];
  const Event& c = ev[i + 2];
  if (!is_crossing(a.kind) || !is_crossing(b.kind) || !is_crossing(c.kind))
    return std::nullopt;
  if (a.slot != c.slot) return std::nullopt;
  if (b.slot == a.slot + 1)
    return Rewrite{3, {{c.kind, a.slot + 1}, {b.kind, a.slot}, {a.kind, a.slot + 1}}};
  if (a.slot == b.slot + 1)
    return Rewrite{3, {{c.kind, b.slot}, {b.kind, b.slot + 1}, {a.kind, b.slot}}};
  return std::nullopt;
}

// Over/under relations of a triple point must form a total order.
bool triple_is_consistent(const Traversal& t, const Events& ev, std::size_t i) {
  // Strands A, B, C start at slots k, k+1, k+2 (indices 0, 1, 2).
  std::array<int, 3> wins{0, 0, 0};
  const bool rising = ev[i + 1].slot == ev[i].slot + 1;
  // Pairs met by the three crossings, as (lower line, upper line).
  const std::array<std::pair<int, int>, 3> pairs =
      rising ? std::array<std::pair<int, int>, 3>{{{0, 1}, {0, 2}, {1, 2}}}
             : std::array<std::pair<int, int>, 3>{{{1, 2}, {0, 2}, {0, 1}}};
  for (int j = 0; j < 3; ++j) {
    const bool lower_over = lower_line_over(t, ev, i + static_cast<std::size_t>(j));
    ++wins[static_cast<std::size_t>(lower_over ? pairs[j].first : pairs[j].second)];
  }
  std::sort(wins.begin(), wins.end());
  return wins == std::array<int, 3>{0, 1, 2};
}

std::optional<Rewrite> front_swallowtail(const Events& ev, std::size_t i) {
  const auto s = detail::curl_at(ev, i);
  if (!s || s->cross != EventKind::FrontCross) return std::nullopt;
  return Rewrite{3, {}};
}

std::optional<Rewrite> front_contract(const Events& ev, std::size_t i) {
  if (i + 2 >= ev.size()) return std::nullopt;
  const Event& a = ev[i];
  const Event& b = ev[i + 1];
  const Event& c = ev[i + 2];
  using K = EventKind;
  if (a.kind == K::Birth && b.kind == K::FrontCross && c.kind == K::FrontCross) {
    const int k = a.slot;
    if (b.slot == k + 1 && c.slot == k) return Rewrite{3, {{K::Birth, k + 1}}};
    if (k >= 2 && b.slot == k - 1 && c.slot == k) return Rewrite{3, {{K::Birth, k - 1}}};
  }
  if (a.kind == K::FrontCross && b.kind == K::FrontCross && c.kind == K::Death) {
    const int k = c.slot;
    if (a.slot == k && b.slot == k + 1) return Rewrite{3, {{K::Death, k + 1}}};
    if (k >= 2 && a.slot == k && b.slot == k - 1) return Rewrite{3, {{K::Death, k - 1}}};
  }
  return std::nullopt;
}

// Expansion of a cusp as a strand at slot `s` passes across it.
std::optional<Rewrite> front_expand(const Events& ev, const std::vector<int>& counts,
                                    std::size_t i, int s) {
  if (i >= ev.size()) return std::nullopt;
  const Event& e = ev[i];
  const int n_in = counts[i];
  using K = EventKind;
  if (e.kind == K::Birth) {
    const int k = e.slot;
    if (s == k - 1 && s >= 1)  // strand just below the cusp moves above it
      return Rewrite{1, {{K::Birth, s}, {K::FrontCross, s + 1}, {K::FrontCross, s}}};
    if (s == k && s <= n_in)  // strand just above the cusp moves below it
      return Rewrite{1, {{K::Birth, s + 1}, {K::FrontCross, s}, {K::FrontCross, s + 1}}};
  }
  if (e.kind == K::Death) {
    const int k = e.slot;
    if (s == k - 1 && s >= 1)
      return Rewrite{1, {{K::FrontCross, s}, {K::FrontCross, s + 1}, {K::Death, s}}};
    if (s == k + 2 && s <= n_in)
      return Rewrite{1, {{K::FrontCross, k + 1}, {K::FrontCross, k}, {K::Death, k + 1}}};
  }
  return std::nullopt;
}

[[noreturn]] void fail(const Move& m, const std::string& why) {
  throw MoveError(to_string(m) + ": " + why);
}

Events apply_rewrite(const Events& ev, std::size_t i, const Rewrite& r) {
  return detail::splice(ev, i, r.removed, r.insert);
}

void require_movable(const Events& ev, const Move& m, std::size_t span) {
  if (m.index < 1) fail(m, "the base point event cannot be moved");
  if (m.index + span > ev.size()) fail(m, "index out of range");
}

void require_arc(const Events& ev, const Move& m) {
  try {
    detail::check_location(ev, {m.index, m.slot});
  } catch (const MoveError& e) {
    fail(m, e.what());
  }
}

// Moves common to fronts and diagrams.
std::optional<Events> apply_common(const Events& ev, const Move& m) {
  switch (m.kind) {
    case MoveKind::Commute: {
      require_movable(ev, m, 2);
      const auto c = commuted(ev[m.index], ev[m.index + 1]);
      if (!c) fail(m, "events do not commute");
      Events out = ev;
      out[m.index] = c->first;
      out[m.index + 1] = c->second;
      return out;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

namespace detail {

void check_location(const Events& ev, Location at) {
  if (at.index < 1) throw MoveError("insertion before the base point event");
  if (at.index >= ev.size()) throw MoveError("location past the last arc");
  const auto counts = strand_counts(ev);
  if (at.slot < 1 || at.slot > counts[at.index])
    throw MoveError("no strand at slot " + std::to_string(at.slot));
}

}  // namespace detail

std::optional<std::pair<Event, Event>> commuted(const Event& first, const Event& second) {
  const Span o = out_span(first);
  const Span in = in_span(second);
  if (!separated(o, in)) return std::nullopt;
  Event a = first;
  Event b = second;
  if (o.hi < in.lo)
    b.slot -= strand_delta(first.kind);
  else
    a.slot += strand_delta(second.kind);
  if (b.slot < 1 || a.slot < 1) return std::nullopt;
  if (!separated(out_span(b), in_span(a))) return std::nullopt;
  return std::pair{b, a};
}

std::string move_kind_name(const Move& m) {
  std::string name = "?";
  for (const auto& n : kNames)
    if (n.kind == m.kind) name = n.name;
  if (m.kind == MoveKind::KinkInsert) {
    const KinkType t = kAllKinkTypes[static_cast<std::size_t>(m.param) % 4];
    name += "(" + std::to_string(t.rotation) + "," + std::to_string(t.writhe) + ")";
  } else if (m.kind == MoveKind::CuspPairInsert) {
    name += "(" + std::to_string(m.param) + ")";
  }
  return name;
}

std::string to_string(const Move& m) {
  return move_kind_name(m) + " " + std::to_string(m.index) + " " + std::to_string(m.slot);
}

Move parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  long long index = -1;
  int slot = 0;
  if (!(in >> kind >> index >> slot) || index < 0)
    throw ParseError("malformed move '" + std::string(line) + "'", 0);
  std::string extra;
  if (in >> extra) throw ParseError("trailing text in move '" + std::string(line) + "'", 0);

  Move m{MoveKind::Commute, static_cast<std::size_t>(index), slot, 0};
  const auto paren = kind.find('(');
  const std::string base = kind.substr(0, paren);
  bool found = false;
  for (const auto& n : kNames) {
    if (base == n.name) {
      m.kind = n.kind;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown move kind '" + kind + "'", 0);
  const bool wants_param =
      m.kind == MoveKind::KinkInsert || m.kind == MoveKind::CuspPairInsert;
  if (wants_param != (paren != std::string::npos))
    throw ParseError("bad parameter in move kind '" + kind + "'", paren);
  if (m.kind == MoveKind::KinkInsert) {
    for (int p = 0; p < 4; ++p) {
      m.param = p;
      if (move_kind_name(m) == kind) return m;
    }
    throw ParseError("unknown kink type in '" + kind + "'", paren);
  }
  if (m.kind == MoveKind::CuspPairInsert) {
    if (kind == "CuspPairInsert(1)") m.param = 1;
    else if (kind == "CuspPairInsert(2)") m.param = 2;
    else throw ParseError("unknown cusp type in '" + kind + "'", paren);
  }
  return m;
}

bool is_regular_isotopy(MoveKind k) {
  switch (k) {
    case MoveKind::Commute:
    case MoveKind::CupCapCancel:
    case MoveKind::CupCapIntroUp:
    case MoveKind::CupCapIntroDown:
    case MoveKind::CupCapSlide:
    case MoveKind::R2IntroPN:
    case MoveKind::R2IntroNP:
    case MoveKind::R2Elim:
    case MoveKind::R3:
      return true;
    default:
      return false;
  }
}

std::vector<Move> applicable_moves(const DiagramWord& w) {
  const Events& ev = w.events();
  const std::size_t n = ev.size();
  const auto counts = strand_counts(ev);
  const Traversal t = traverse(ev);
  std::vector<Move> out;

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (commuted(ev[i], ev[i + 1])) out.push_back({MoveKind::Commute, i, ev[i].slot});
    if (cup_cap_cancel(ev, i)) out.push_back({MoveKind::CupCapCancel, i, ev[i].slot});
    if (slide(ev, i)) out.push_back({MoveKind::CupCapSlide, i, ev[i].slot});
    if (signed_cross(ev[i].kind) && signed_cross(ev[i + 1].kind) &&
        ev[i].slot == ev[i + 1].slot && ev[i].kind != ev[i + 1].kind)
      out.push_back({MoveKind::R2Elim, i, ev[i].slot});
    if (i + 2 < n && signed_cross(ev[i].kind) && signed_cross(ev[i + 1].kind) &&
        signed_cross(ev[i + 2].kind) && triple(ev, i) && triple_is_consistent(t, ev, i))
      out.push_back({MoveKind::R3, i, ev[i].slot});
  }
  for (std::size_t g = 1; g < n; ++g) {
    for (int k = 1; k <= counts[g]; ++k) {
      out.push_back({MoveKind::CupCapIntroUp, g, k});
      out.push_back({MoveKind::CupCapIntroDown, g, k});
      if (k < counts[g]) {
        out.push_back({MoveKind::R2IntroPN, g, k});
        out.push_back({MoveKind::R2IntroNP, g, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Move> applicable_moves(const FrontWord& w) {
  const Events& ev = w.events();
  const std::size_t n = ev.size();
  const auto counts = strand_counts(ev);
  std::vector<Move> out;

  for (std::size_t i = 1; i < n; ++i) {
    if (i + 1 < n && commuted(ev[i], ev[i + 1]))
      out.push_back({MoveKind::Commute, i, ev[i].slot});
    if (front_swallowtail(ev, i)) out.push_back({MoveKind::FrontMoveIElim, i, ev[i].slot});
    if (front_contract(ev, i)) out.push_back({MoveKind::FrontMoveIIContract, i, ev[i].slot});
    if (triple(ev, i)) out.push_back({MoveKind::FrontMoveIII, i, ev[i].slot});
    const int k = ev[i].slot;
    for (int s : {k - 1, k, k + 2})
      if (front_expand(ev, counts, i, s)) out.push_back({MoveKind::FrontMoveIIExpand, i, s});
  }
  for (std::size_t g = 1; g < n; ++g) {
    for (int k = 1; k <= counts[g]; ++k) {
      out.push_back({MoveKind::FrontMoveIIntroUp, g, k});
      out.push_back({MoveKind::FrontMoveIIntroDown, g, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramWord apply_move(const DiagramWord& w, const Move& m) {
  const Events& ev = w.events();
  if (auto common = apply_common(ev, m)) return DiagramWord(std::move(*common));

  switch (m.kind) {
    case MoveKind::CupCapCancel: {
      require_movable(ev, m, 2);
      const auto r = cup_cap_cancel(ev, m.index);
      if (!r) fail(m, "no zigzag here");
      return DiagramWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::CupCapIntroUp:
    case MoveKind::CupCapIntroDown: {
      require_arc(ev, m);
      const int k = m.slot;
      const std::vector<Event> zig =
          m.kind == MoveKind::CupCapIntroUp
              ? std::vector<Event>{{EventKind::Birth, k + 1}, {EventKind::Death, k}}
              : std::vector<Event>{{EventKind::Birth, k}, {EventKind::Death, k + 1}};
      return DiagramWord(detail::splice(ev, m.index, 0, zig));
    }
    case MoveKind::CupCapSlide: {
      require_movable(ev, m, 2);
      const auto r = slide(ev, m.index);
      if (!r) fail(m, "no crossing next to a cup or cap here");
      return DiagramWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::R2IntroPN:
    case MoveKind::R2IntroNP: {
      require_arc(ev, m);
      if (m.slot + 1 > strand_counts(ev)[m.index]) fail(m, "needs two adjacent strands");
      const bool pn = m.kind == MoveKind::R2IntroPN;
      const std::vector<Event> pair{
          {pn ? EventKind::CrossPos : EventKind::CrossNeg, m.slot},
          {pn ? EventKind::CrossNeg : EventKind::CrossPos, m.slot}};
      return DiagramWord(detail::splice(ev, m.index, 0, pair));
    }
    case MoveKind::R2Elim: {
      require_movable(ev, m, 2);
      const Event& a = ev[m.index];
      const Event& b = ev[m.index + 1];
      if (!signed_cross(a.kind) || !signed_cross(b.kind) || a.slot != b.slot ||
          a.kind == b.kind)
        fail(m, "no opposite crossing pair here");
      return DiagramWord(detail::splice(ev, m.index, 2, {}));
    }
    case MoveKind::R3: {
      require_movable(ev, m, 3);
      for (std::size_t j = 0; j < 3; ++j)
        if (!signed_cross(ev[m.index + j].kind)) fail(m, "not three crossings");
      const auto r = triple(ev, m.index);
      if (!r) fail(m, "not a triple point");
      if (!triple_is_consistent(traverse(ev), ev, m.index))
        fail(m, "over/under pattern is cyclic");
      return DiagramWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::KinkInsert:
      if (m.param < 0 || m.param > 3) fail(m, "bad kink type");
      try {
        return insert_kink(w, kAllKinkTypes[static_cast<std::size_t>(m.param)],
                           {m.index, m.slot});
      } catch (const MoveError& e) {
        fail(m, e.what());
      }
    case MoveKind::KinkCancelPair: {
      require_movable(ev, m, 6);
      const auto a = detail::curl_at(ev, m.index);
      const auto b = detail::curl_at(ev, m.index + 3);
      if (!a || !b || a->strand != b->strand) fail(m, "no adjacent curls on one strand");
      const Traversal t = traverse(ev);
      const KinkType ta = detail::curl_type(*a, t.dir(m.index, a->strand));
      const KinkType tb = detail::curl_type(*b, t.dir(m.index + 3, b->strand));
      if (ta.rotation + tb.rotation != 0 || ta.writhe + tb.writhe != 0)
        fail(m, "curls are not a cancelling pair");
      return DiagramWord(detail::splice(ev, m.index, 6, {}));
    }
    default:
      fail(m, "not a diagram move");
  }
}

FrontWord apply_move(const FrontWord& w, const Move& m) {
  const Events& ev = w.events();
  if (auto common = apply_common(ev, m)) return FrontWord(std::move(*common));

  switch (m.kind) {
    case MoveKind::FrontMoveIIntroUp:
    case MoveKind::FrontMoveIIntroDown: {
      require_arc(ev, m);
      return FrontWord(detail::splice(
          ev, m.index, 0,
          detail::curl(m.slot, m.kind == MoveKind::FrontMoveIIntroUp, EventKind::FrontCross)));
    }
    case MoveKind::FrontMoveIElim: {
      require_movable(ev, m, 3);
      const auto r = front_swallowtail(ev, m.index);
      if (!r) fail(m, "no swallowtail here");
      return FrontWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::FrontMoveIIExpand: {
      require_movable(ev, m, 1);
      const auto r = front_expand(ev, strand_counts(ev), m.index, m.slot);
      if (!r) fail(m, "no strand next to a cusp here");
      return FrontWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::FrontMoveIIContract: {
      require_movable(ev, m, 3);
      const auto r = front_contract(ev, m.index);
      if (!r) fail(m, "no strand crossing a cusp here");
      return FrontWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::FrontMoveIII: {
      require_movable(ev, m, 3);
      const auto r = triple(ev, m.index);
      if (!r) fail(m, "not a triple point");
      return FrontWord(apply_rewrite(ev, m.index, *r));
    }
    case MoveKind::CuspPairInsert:
      try {
        return insert_cusp_pair(w, m.param, {m.index, m.slot});
      } catch (const MoveError& e) {
        fail(m, e.what());
      }
    default:
      fail(m, "not a front move");
  }
}

Move inverse_move(const DiagramWord& w, const Move& m) {
  const Events& ev = w.events();
  switch (m.kind) {
    case MoveKind::Commute: {
      const auto c = commuted(ev[m.index], ev[m.index + 1]);
      return {MoveKind::Commute, m.index, c ? c->first.slot : m.slot};
    }
    case MoveKind::CupCapSlide: {
      const auto r = slide(ev, m.index);
      return {MoveKind::CupCapSlide, m.index, r ? r->insert.front().slot : m.slot};
    }
    case MoveKind::R3: {
      const auto r = triple(ev, m.index);
      return {MoveKind::R3, m.index, r ? r->insert.front().slot : m.slot};
    }
    case MoveKind::CupCapCancel: {
      const Event& a = ev[m.index];
      const Event& b = ev[m.index + 1];
      if (a.slot == b.slot + 1) return {MoveKind::CupCapIntroUp, m.index, b.slot};
      return {MoveKind::CupCapIntroDown, m.index, a.slot};
    }
    case MoveKind::CupCapIntroUp:
      return {MoveKind::CupCapCancel, m.index, m.slot + 1};
    case MoveKind::CupCapIntroDown:
      return {MoveKind::CupCapCancel, m.index, m.slot};
    case MoveKind::R2IntroPN:
    case MoveKind::R2IntroNP:
      return {MoveKind::R2Elim, m.index, m.slot};
    case MoveKind::R2Elim:
      return {ev[m.index].kind == EventKind::CrossPos ? MoveKind::R2IntroPN
                                                       : MoveKind::R2IntroNP,
              m.index, ev[m.index].slot};
    default:
      fail(m, "move has no inverse in the diagram move basis");
  }
}

DiagramWord replay(const DiagramWord& start, const std::vector<Move>& moves) {
  DiagramWord w = start;
  for (const auto& m : moves) w = apply_move(w, m);
  return w;
}

bool verify(const MoveTrace& t) {
  try {
    return replay(t.start, t.moves) == t.end;
  } catch (const Error&) {
    return false;
  }
}

std::string serialize_moves(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) out += to_string(m) + "\n";
  return out;
}

std::vector<Move> parse_moves(std::string_view text) {
  std::vector<Move> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') out.push_back(parse_move(line));
    pos = end + 1;
  }
  return out;
}

}  // namespace legknot
