#include <cstdlib>

#include "legknot/moves.hpp"
#include "move_detail.hpp"

namespace legknot {

using detail::Events;

namespace {

Events with_kink(const Events& ev, KinkType t, Location at) {
  detail::check_location(ev, at);
  const int dir = traverse(ev).dir(at.index, at.slot);
  const bool above = t.rotation * dir > 0;
  const EventKind cross = t.writhe > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
  return detail::splice(ev, at.index, 0, detail::curl(at.slot, above, cross));
}

Events with_stabilization(Events ev, StabVector s) {
  std::size_t at = 1;
  const auto add = [&](int count, KinkType positive, KinkType negative) {
    for (int n = 0; n < std::abs(count); ++n) {
      ev = with_kink(ev, count > 0 ? positive : negative, {at, 1});
      at += 3;
    }
  };
  add(s.i, KinkType::pp(), KinkType::nn());
  add(s.j, KinkType::np(), KinkType::pn());
  return ev;
}

}  // namespace

DiagramWord insert_kink(const DiagramWord& d, KinkType t, Location at) {
  return DiagramWord(with_kink(d.events(), t, at));
}

SingularDiagramWord insert_singular_kink(const SingularDiagramWord& d, KinkType t,
                                         Location at) {
  return SingularDiagramWord(with_kink(d.events(), t, at));
}

std::optional<KinkType> kink_at(const DiagramWord& d, std::size_t i) {
  const auto s = detail::curl_at(d.events(), i);
  if (!s) return std::nullopt;
  return detail::curl_type(*s, traverse(d.events()).dir(i, s->strand));
}

DiagramWord stabilize(const DiagramWord& d, StabVector s) {
  return DiagramWord(with_stabilization(d.events(), s));
}

SingularDiagramWord stabilize(const SingularDiagramWord& d, StabVector s) {
  return SingularDiagramWord(with_stabilization(d.events(), s));
}

FrontWord insert_cusp_pair(const FrontWord& f, int type, Location at) {
  if (type != 1 && type != 2) throw MoveError("cusp pair type must be 1 or 2");
  const Events& ev = f.events();
  detail::check_location(ev, at);
  const int dir = traverse(ev).dir(at.index, at.slot);
  const int k = at.slot;
  // A zigzag climbing across the strand: both cusps are traversed upwards when
  // the strand heads right.
  const bool climbing = (type == 1) == (dir > 0);
  const std::vector<Event> zig =
      climbing ? std::vector<Event>{{EventKind::Birth, k + 1}, {EventKind::Death, k}}
               : std::vector<Event>{{EventKind::Birth, k}, {EventKind::Death, k + 1}};
  return FrontWord(detail::splice(ev, at.index, 0, zig));
}

SingularDiagramWord pull_kink_through_double_point(const SingularDiagramWord& d,
                                                   std::size_t kink) {
  const Events& ev = d.events();
  if (kink < 1) throw MoveError("the base point event cannot be moved");
  const auto shape = detail::curl_at(ev, kink);
  if (!shape || shape->cross == EventKind::DoublePoint)
    throw MoveError("no kink at event " + std::to_string(kink));
  const int k = shape->strand;

  // Double point to the right, on the strand leaving the curl.
  if (kink + 3 < ev.size() && ev[kink + 3].kind == EventKind::DoublePoint) {
    const Event dp = ev[kink + 3];
    if (dp.slot == k || dp.slot + 1 == k) {
      const int moved = dp.slot == k ? k + 1 : k - 1;
      std::vector<Event> repl{dp};
      const auto c = detail::curl(moved, shape->above, shape->cross);
      repl.insert(repl.end(), c.begin(), c.end());
      return SingularDiagramWord(detail::splice(ev, kink, 4, repl));
    }
  }
  // Double point to the left, on the strand entering the curl.
  if (kink >= 2 && ev[kink - 1].kind == EventKind::DoublePoint) {
    const Event dp = ev[kink - 1];
    if (dp.slot == k || dp.slot + 1 == k) {
      const int moved = dp.slot == k ? k + 1 : k - 1;
      std::vector<Event> repl = detail::curl(moved, shape->above, shape->cross);
      repl.push_back(dp);
      return SingularDiagramWord(detail::splice(ev, kink - 1, 4, repl));
    }
  }
  throw MoveError("no double point next to the kink at event " + std::to_string(kink));
}

}  // namespace legknot
