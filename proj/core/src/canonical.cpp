#include "legknot/search.hpp"

namespace legknot {

namespace {

using Events = std::vector<Event>;

// Event j moved to position t by adjacent commutations, or nullopt.
std::optional<Event> bubble_probe(const Events& ev, std::size_t j, std::size_t t) {
  Event cur = ev[j];
  for (std::size_t p = j; p > t; --p) {
    const auto c = commuted(ev[p - 1], cur);
    if (!c) return std::nullopt;
    cur = c->first;
  }
  return cur;
}

void bubble(Events& ev, std::size_t j, std::size_t t, std::vector<std::size_t>& swaps) {
  for (std::size_t p = j; p > t; --p) {
    const auto c = commuted(ev[p - 1], ev[p]);
    ev[p - 1] = c->first;
    ev[p] = c->second;
    swaps.push_back(p - 1);
  }
}

// Greedy lexicographic normal form of positions [t, hi). Ties (independent
// events that read the same, e.g. two cups in one region) are resolved by
// comparing complete completions.
void normalize(Events& ev, std::size_t t, std::size_t hi, std::vector<std::size_t>& swaps) {
  for (; t + 1 < hi; ++t) {
    std::optional<Event> best;
    std::vector<std::size_t> ties;
    for (std::size_t j = t; j < hi; ++j) {
      const auto tok = bubble_probe(ev, j, t);
      if (!tok) continue;
      if (!best || *tok < *best) {
        best = tok;
        ties.assign(1, j);
      } else if (*tok == *best) {
        ties.push_back(j);
      }
    }
    if (ties.size() == 1) {
      bubble(ev, ties.front(), t, swaps);
      continue;
    }
    std::optional<Events> best_word;
    std::vector<std::size_t> best_swaps;
    for (const std::size_t j : ties) {
      Events trial = ev;
      std::vector<std::size_t> trial_swaps;
      bubble(trial, j, t, trial_swaps);
      normalize(trial, t + 1, hi, trial_swaps);
      if (!best_word || trial < *best_word) {
        best_word = std::move(trial);
        best_swaps = std::move(trial_swaps);
      }
    }
    ev = std::move(*best_word);
    swaps.insert(swaps.end(), best_swaps.begin(), best_swaps.end());
    return;
  }
}

}  // namespace

DiagramWord canonical_form(const DiagramWord& w, std::vector<std::size_t>& swaps) {
  return canonical_form(w, 1, 0, swaps);
}

DiagramWord canonical_form(const DiagramWord& w, std::size_t prefix, std::size_t suffix,
                           std::vector<std::size_t>& swaps) {
  Events ev = w.events();
  if (prefix < 1 || prefix + suffix > ev.size())
    throw MoveError("frozen prefix and suffix overlap");
  normalize(ev, prefix, ev.size() - suffix, swaps);
  return DiagramWord(std::move(ev));
}

DiagramWord canonical_form(const DiagramWord& w) {
  std::vector<std::size_t> swaps;
  return canonical_form(w, swaps);
}

}  // namespace legknot
