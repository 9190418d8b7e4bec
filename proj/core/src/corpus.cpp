#include "legknot/corpus.hpp"

#include <stdexcept>

#include "legknot/convert.hpp"
#include "legknot/traversal.hpp"

namespace legknot {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random strand bookkeeping walk; `cross_kind` picks each crossing's kind.
template <typename CrossKind>
std::vector<Event> random_events(std::mt19937_64& rng, int crossings, int max_strands,
                                 CrossKind cross_kind) {
  std::vector<Event> ev{{EventKind::Birth, 1}};
  int n = 2;
  int left = crossings;
  while (n > 0) {
    const bool can_cross = left > 0;
    const bool can_birth = n + 2 <= max_strands && ev.size() < 200;
    // Closing early is only possible when nothing is left to place.
    const bool can_death = n > 2 || !can_cross;
    const int r = uniform(rng, 0, 9);
    if (can_cross && (r < 5 || (!can_birth && !can_death))) {
      ev.push_back({cross_kind(left), uniform(rng, 1, n - 1)});
      --left;
    } else if (can_birth && (r < 8 || !can_death)) {
      ev.push_back({EventKind::Birth, uniform(rng, 1, n + 1)});
      n += 2;
    } else {
      ev.push_back({EventKind::Death, uniform(rng, 1, n - 1)});
      n -= 2;
    }
  }
  return ev;
}

template <typename W, typename CrossKind>
W random_word(std::mt19937_64& rng, int crossings, int max_strands, CrossKind cross_kind) {
  if (max_strands < 2) throw std::invalid_argument("max_strands must be at least 2");
  for (;;) {
    auto ev = random_events(rng, crossings, max_strands, cross_kind);
    if (traverse(ev).single_component) return W(std::move(ev));
  }
}

EventKind random_sign(std::mt19937_64& rng) {
  return uniform(rng, 0, 1) ? EventKind::CrossPos : EventKind::CrossNeg;
}

}  // namespace

DiagramWord random_diagram(std::mt19937_64& rng, const RandomWordOptions& opts) {
  const int c = uniform(rng, 0, opts.max_crossings);
  return random_word<DiagramWord>(rng, c, opts.max_strands,
                                  [&](int) { return random_sign(rng); });
}

FrontWord random_front(std::mt19937_64& rng, const RandomWordOptions& opts) {
  const int c = uniform(rng, 0, opts.max_crossings);
  return random_word<FrontWord>(rng, c, opts.max_strands,
                                [](int) { return EventKind::FrontCross; });
}

SingularDiagramWord random_singular(std::mt19937_64& rng, const RandomWordOptions& opts) {
  const int c = uniform(rng, 0, opts.max_crossings);
  const int total = c + opts.double_points;
  // Exactly `double_points` of the crossing events become double points.
  for (;;) {
    std::vector<bool> dp(static_cast<std::size_t>(total), false);
    for (int placed = 0; placed < opts.double_points;) {
      const int at = uniform(rng, 0, total - 1);
      if (!dp[static_cast<std::size_t>(at)]) {
        dp[static_cast<std::size_t>(at)] = true;
        ++placed;
      }
    }
    auto ev = random_events(rng, total, opts.max_strands, [&](int left) {
      return dp[static_cast<std::size_t>(left - 1)] ? EventKind::DoublePoint : random_sign(rng);
    });
    if (traverse(ev).single_component) return SingularDiagramWord(std::move(ev));
  }
}

void enumerate_words(const EnumerationBounds& bounds,
                     const std::function<void(const std::vector<Event>&)>& visit) {
  std::vector<Event> ev{{EventKind::Birth, 1}};
  // Depth-first over events in token order: Birth, Death, CrossPos, CrossNeg,
  // DoublePoint.
  const auto rec = [&](auto&& self, int n, int births, int crossings, int dps) -> void {
    if (n == 0) {
      if (dps == bounds.double_points && traverse(ev).single_component) visit(ev);
      return;
    }
    if (births < bounds.max_births) {
      for (int k = 1; k <= n + 1; ++k) {
        ev.push_back({EventKind::Birth, k});
        self(self, n + 2, births + 1, crossings, dps);
        ev.pop_back();
      }
    }
    for (int k = 1; k < n; ++k) {
      // The last death closes the curve; all double points must be in by then.
      if (n == 2 && dps != bounds.double_points) break;
      ev.push_back({EventKind::Death, k});
      self(self, n - 2, births, crossings, dps);
      ev.pop_back();
    }
    if (crossings < bounds.max_crossings) {
      const bool need_dp = bounds.double_points - dps > 0;
      const bool room_for_plain = bounds.max_crossings - crossings > bounds.double_points - dps;
      for (int k = 1; k < n; ++k) {
        if (room_for_plain) {
          for (const EventKind kind : {EventKind::CrossPos, EventKind::CrossNeg}) {
            ev.push_back({kind, k});
            self(self, n, births, crossings + 1, dps);
            ev.pop_back();
          }
        }
        if (need_dp) {
          ev.push_back({EventKind::DoublePoint, k});
          self(self, n, births, crossings + 1, dps + 1);
          ev.pop_back();
        }
      }
    }
  };
  rec(rec, 2, 1, 0, 0);
}

std::vector<SingularDiagramWord> enumerate_singular(const EnumerationBounds& bounds) {
  std::vector<SingularDiagramWord> out;
  enumerate_words(bounds, [&](const std::vector<Event>& ev) { out.emplace_back(ev); });
  return out;
}

std::vector<DiagramWord> enumerate_diagrams(const EnumerationBounds& bounds) {
  EnumerationBounds b = bounds;
  b.double_points = 0;
  std::vector<DiagramWord> out;
  enumerate_words(b, [&](const std::vector<Event>& ev) { out.emplace_back(ev); });
  return out;
}

FrontWord unknot_front() { return parse_front("L1 R1"); }
FrontWord right_trefoil_front() { return parse_front("L1 L1 X2 X2 X2 R1 R1"); }
DiagramWord unknot_diagram() { return parse_diagram("Cup1 Cap1"); }
DiagramWord right_trefoil_diagram() { return front_to_diagram(right_trefoil_front()); }
DiagramWord left_trefoil_diagram() { return parse_diagram("Cup1 Cup3 Xn2 Xn2 Xn2 Cap1 Cap1"); }
DiagramWord figure_eight_diagram() { return parse_diagram("Cup1 Cup3 Xn2 Xn2 Xp1 Xp2 Cap1 Cap1"); }

}  // namespace legknot
