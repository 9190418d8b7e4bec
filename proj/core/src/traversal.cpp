#include "legknot/traversal.hpp"

#include <cassert>

namespace legknot {

Traversal traverse(std::span<const Event> events) {
  Traversal t;
  const auto counts = strand_counts(events);
  t.direction.resize(counts.size());
  std::size_t total = 0;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    t.direction[g].assign(static_cast<std::size_t>(counts[g]), 0);
    total += static_cast<std::size_t>(counts[g]);
  }
  if (events.empty()) return t;

  std::size_t gap = 1;
  int pos = 1;
  int dir = +1;
  std::size_t visited = 0;

  for (;;) {
    auto& cell = t.direction[gap][pos - 1];
    if (cell != 0) break;  // closed the loop
    cell = static_cast<std::int8_t>(dir);
    ++visited;

    if (dir > 0) {
      const std::size_t idx = gap;
      const Event& e = events[idx];
      const int k = e.slot;
      switch (e.kind) {
        case EventKind::Birth:
          pos = pos >= k ? pos + 2 : pos;
          gap += 1;
          break;
        case EventKind::Death:
          if (pos == k) {
            pos = k + 1;
            dir = -1;
          } else if (pos == k + 1) {
            pos = k;
            dir = -1;
          } else {
            pos = pos > k + 1 ? pos - 2 : pos;
            gap += 1;
          }
          break;
        default:
          if (pos == k) {
            t.passages.push_back({idx, true});
            pos = k + 1;
          } else if (pos == k + 1) {
            t.passages.push_back({idx, false});
            pos = k;
          }
          gap += 1;
          break;
      }
    } else {
      const std::size_t idx = gap - 1;
      const Event& e = events[idx];
      const int k = e.slot;
      switch (e.kind) {
        case EventKind::Birth:
          if (pos == k) {
            pos = k + 1;
            dir = +1;
          } else if (pos == k + 1) {
            pos = k;
            dir = +1;
          } else {
            pos = pos > k + 1 ? pos - 2 : pos;
            gap -= 1;
          }
          break;
        case EventKind::Death:
          pos = pos >= k ? pos + 2 : pos;
          gap -= 1;
          break;
        default:
          if (pos == k + 1) {
            t.passages.push_back({idx, true});
            pos = k;
          } else if (pos == k) {
            t.passages.push_back({idx, false});
            pos = k + 1;
          }
          gap -= 1;
          break;
      }
    }
  }
  t.single_component = visited == total;
  return t;
}

CrossingGeometry crossing_geometry(const Traversal& t, std::span<const Event> events,
                                   std::size_t i) {
  const int k = events[i].slot;
  return {t.dir(i, k), t.dir(i, k + 1)};
}

bool lower_line_over(const Traversal& t, std::span<const Event> events, std::size_t i) {
  const auto g = crossing_geometry(t, events, i);
  switch (events[i].kind) {
    case EventKind::FrontCross:
      return false;
    case EventKind::CrossPos:
    case EventKind::CrossNeg:
      return crossing_sign(events[i].kind) == -g.lower_dir * g.upper_dir;
    default:
      assert(false && "not a resolved crossing");
      return false;
  }
}

int front_crossing_sign(const Traversal& t, std::span<const Event> events, std::size_t i) {
  const auto g = crossing_geometry(t, events, i);
  return g.lower_dir * g.upper_dir;
}

int turn_lower_dir(const Traversal& t, std::span<const Event> events, std::size_t i) {
  const Event& e = events[i];
  return e.kind == EventKind::Birth ? t.dir(i + 1, e.slot) : t.dir(i, e.slot);
}

}  // namespace legknot
