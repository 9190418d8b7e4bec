// Event-level helpers shared by the move, kink and conversion code.
#pragma once

#include <optional>
#include <vector>

#include "legknot/moves.hpp"
#include "legknot/traversal.hpp"

namespace legknot::detail {

using Events = std::vector<Event>;

/// Curl templates on the strand at slot k:
///   above: Birth(k+1) X(k) Death(k+1)   (loop on the upper side)
///   below: Birth(k)   X(k+1) Death(k)   (loop on the lower side)
/// The same shapes with front crossings are the Legendrian swallowtails.
inline std::vector<Event> curl(int k, bool above, EventKind cross) {
  if (above) return {{EventKind::Birth, k + 1}, {cross, k}, {EventKind::Death, k + 1}};
  return {{EventKind::Birth, k}, {cross, k + 1}, {EventKind::Death, k}};
}

struct CurlShape {
  int strand;
  bool above;
  EventKind cross;
};

inline std::optional<CurlShape> curl_at(const Events& ev, std::size_t i) {
  if (i + 2 >= ev.size()) return std::nullopt;
  const Event& a = ev[i];
  const Event& b = ev[i + 1];
  const Event& c = ev[i + 2];
  if (a.kind != EventKind::Birth || c.kind != EventKind::Death || !is_crossing(b.kind))
    return std::nullopt;
  if (a.slot == b.slot + 1 && c.slot == a.slot) return CurlShape{b.slot, true, b.kind};
  if (b.slot == a.slot + 1 && c.slot == a.slot) return CurlShape{a.slot, false, b.kind};
  return std::nullopt;
}

/// Kink type of a curl whose strand is traversed in direction `dir`.
inline KinkType curl_type(const CurlShape& s, int dir) {
  return {(s.above ? 1 : -1) * dir, crossing_sign(s.cross)};
}

inline Events splice(const Events& ev, std::size_t at, std::size_t remove,
                     const std::vector<Event>& insert) {
  Events out;
  out.reserve(ev.size() - remove + insert.size());
  out.insert(out.end(), ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), ev.begin() + static_cast<std::ptrdiff_t>(at + remove), ev.end());
  return out;
}

/// Checks that `at` names an arc that may receive an insertion.
void check_location(const Events& ev, Location at);

}  // namespace legknot::detail
