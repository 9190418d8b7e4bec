#include "legknot/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "legknot/invariants.hpp"

namespace legknot {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Equivalent:
      return "equivalent";
    case Outcome::NotEquivalent:
      return "not-equivalent";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// First `prefix` and last `suffix` events are frozen.
struct Window {
  std::size_t prefix = 1;
  std::size_t suffix = 0;

  bool keeps(const DiagramWord& from, const DiagramWord& to) const {
    const auto& x = from.events();
    const auto& y = to.events();
    if (y.size() < prefix + suffix) return false;
    return std::equal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(prefix), y.begin()) &&
           std::equal(x.end() - static_cast<std::ptrdiff_t>(suffix), x.end(),
                      y.end() - static_cast<std::ptrdiff_t>(suffix));
  }

  bool admits(const Move& m, std::size_t size) const {
    return m.index >= prefix && m.index + suffix <= size;
  }

  DiagramWord canon(const DiagramWord& w, std::vector<std::size_t>& swaps) const {
    return canonical_form(w, prefix, suffix, swaps);
  }
  DiagramWord canon(const DiagramWord& w) const {
    std::vector<std::size_t> swaps;
    return canon(w, swaps);
  }
};

// Compact hash key: two bytes per event.
std::string key_of(const DiagramWord& w) {
  std::string k;
  k.reserve(2 * w.size());
  for (const Event& e : w.events()) {
    k.push_back(static_cast<char>(e.kind));
    k.push_back(static_cast<char>(e.slot));
  }
  return k;
}

// Appends Commute moves for `swaps` applied to w in order; returns the result.
DiagramWord append_swaps(const DiagramWord& w, const std::vector<std::size_t>& swaps,
                         std::vector<Move>& out) {
  std::vector<Event> ev = w.events();
  for (const std::size_t p : swaps) {
    out.push_back({MoveKind::Commute, p, ev[p].slot});
    const auto c = commuted(ev[p], ev[p + 1]);
    ev[p] = c->first;
    ev[p + 1] = c->second;
  }
  return DiagramWord(std::move(ev));
}

std::vector<std::size_t> reversed(std::vector<std::size_t> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

struct Node {
  std::string parent;  // empty for a root
  DiagramWord word;    // canonical within the window
  DiagramWord parent_word;
  Move move{MoveKind::Commute, 0};
  int depth = 0;
};

using Tree = std::unordered_map<std::string, Node>;

struct Side {
  Tree tree;
  std::vector<std::string> frontier;
  int depth = 0;
};

std::optional<std::string> separating_invariant(const DiagramWord& a, const DiagramWord& b) {
  if (writhe(a) != writhe(b)) return "writhe";
  if (whitney_rotation(a) != whitney_rotation(b)) return "rotation";
  if (v2(a) != v2(b)) return "v2";
  if (v3(a) != v3(b)) return "v3";
  return std::nullopt;
}

// Chain of nodes from the root of `t` to `key`, root first.
std::vector<const Node*> chain(const Tree& t, const std::string& key) {
  std::vector<const Node*> out;
  for (const Node* n = &t.at(key);; n = &t.at(n->parent)) {
    out.push_back(n);
    if (n->parent.empty()) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_planar(MoveKind k) {
  return k == MoveKind::CupCapIntroUp || k == MoveKind::CupCapIntroDown ||
         k == MoveKind::CupCapCancel || k == MoveKind::CupCapSlide;
}

bool is_reidemeister(MoveKind k) {
  return k == MoveKind::R2IntroPN || k == MoveKind::R2IntroNP || k == MoveKind::R2Elim ||
         k == MoveKind::R3;
}

class WindowSearch {
 public:
  WindowSearch(const DiagramWord& a, const DiagramWord& b, Window win, int max_events,
               int max_crossings, int max_depth, std::size_t max_states)
      : a_(a),
        b_(b),
        win_(win),
        max_events_(max_events),
        max_crossings_(max_crossings),
        max_depth_(max_depth),
        max_states_(max_states) {}

  SearchResult run() {
    const DiagramWord ca = win_.canon(a_, a_swaps_);
    const DiagramWord cb = win_.canon(b_, b_swaps_);
    const std::string ka = key_of(ca);
    const std::string kb = key_of(cb);
    sides_[0].tree.emplace(ka, Node{"", ca, ca, {MoveKind::Commute, 0}, 0});
    sides_[0].frontier.push_back(ka);
    sides_[1].tree.emplace(kb, Node{"", cb, cb, {MoveKind::Commute, 0}, 0});
    sides_[1].frontier.push_back(kb);
    if (ka == kb) return finish(ka);

    close_layer(0);
    if (!over_budget_) close_layer(1);
    while (true) {
      if (best_meet_) return finish(best_meet_->second);
      if (over_budget_) return give_up("state budget exhausted");
      if (sides_[0].depth + sides_[1].depth >= max_depth_)
        return give_up("depth budget exhausted");
      if (sides_[0].frontier.empty() || sides_[1].frontier.empty())
        return give_up("state space exhausted within the size bounds");
      const int s = sides_[0].frontier.size() <= sides_[1].frontier.size() ? 0 : 1;
      Side& me = sides_[s];
      std::vector<std::string> next;
      for (const std::string& key : me.frontier) {
        expand(s, key, me.depth + 1, is_reidemeister, next);
        if (over_budget_) break;
      }
      me.frontier = std::move(next);
      ++me.depth;
      if (!over_budget_) close_layer(s);
    }
  }

 private:
  std::size_t visited() const { return sides_[0].tree.size() + sides_[1].tree.size(); }

  SearchResult give_up(const char* why) const {
    SearchResult r;
    r.outcome = Outcome::Inconclusive;
    r.reason = why;
    r.states_visited = visited();
    return r;
  }

  SearchResult finish(const std::string& meet) const {
    SearchResult r;
    r.outcome = Outcome::Equivalent;
    r.trace = shortcut(build_trace(meet));
    r.states_visited = visited();
    if (!verify(*r.trace)) throw std::logic_error("search produced an invalid trace");
    return r;
  }

  // Adds the children of `key` reached by moves accepted by `want`; new keys
  // go to `out`.
  void expand(int s, const std::string& key, int depth, bool (*want)(MoveKind),
              std::vector<std::string>& out) {
    Side& me = sides_[s];
    const Side& other = sides_[1 - s];
    const DiagramWord parent = me.tree.at(key).word;
    const int crossings = static_cast<int>(parent.crossing_count());
    const int size = static_cast<int>(parent.size());
    for (const Move& m : applicable_moves(parent)) {
      if (!want(m.kind) || !win_.admits(m, parent.size())) continue;
      if ((m.kind == MoveKind::R2IntroPN || m.kind == MoveKind::R2IntroNP) &&
          crossings + 2 > max_crossings_)
        continue;
      if ((m.kind == MoveKind::CupCapIntroUp || m.kind == MoveKind::CupCapIntroDown) &&
          size + 2 > max_events_)
        continue;
      const DiagramWord raw = apply_move(parent, m);
      if (!win_.keeps(parent, raw)) continue;
      DiagramWord child = win_.canon(raw);
      std::string ck = key_of(child);
      if (me.tree.contains(ck)) continue;
      if (const auto it = other.tree.find(ck); it != other.tree.end()) {
        const std::pair<int, std::string> cand{depth + it->second.depth, ck};
        if (!best_meet_ || cand < *best_meet_) best_meet_ = cand;
      }
      me.tree.emplace(ck, Node{key, std::move(child), parent, m, depth});
      out.push_back(std::move(ck));
      if (visited() > max_states_) {
        over_budget_ = true;
        return;
      }
    }
  }

  // Planar isotopy is free: a layer is closed under planar moves before the
  // next Reidemeister move is taken.
  void close_layer(int s) {
    Side& me = sides_[s];
    for (std::size_t q = 0; q < me.frontier.size() && !over_budget_; ++q) {
      const std::string key = me.frontier[q];
      expand(s, key, me.depth, is_planar, me.frontier);
    }
  }

  // Drops detours: from each state, jump to the latest later state that one
  // admissible move (or none) reaches.
  MoveTrace shortcut(const MoveTrace& t) const {
    std::vector<DiagramWord> states{t.start};
    for (const Move& m : t.moves) states.push_back(apply_move(states.back(), m));
    std::unordered_map<std::string, std::size_t> last;
    for (std::size_t j = 0; j < states.size(); ++j) last[key_of(states[j])] = j;

    MoveTrace out{t.start, {}, t.end};
    for (std::size_t i = 0; i + 1 < states.size();) {
      const std::size_t same = last.at(key_of(states[i]));
      if (same > i) {
        i = same;
        continue;
      }
      std::size_t to = i + 1;
      Move step = t.moves[i];
      for (const Move& m : applicable_moves(states[i])) {
        if (!win_.admits(m, states[i].size())) continue;
        const DiagramWord w = apply_move(states[i], m);
        if (!win_.keeps(states[i], w)) continue;
        const auto it = last.find(key_of(w));
        if (it != last.end() && it->second > to) {
          to = it->second;
          step = m;
        }
      }
      out.moves.push_back(step);
      i = to;
    }
    return out;
  }

  MoveTrace build_trace(const std::string& meet) const {
    MoveTrace t{a_, {}, b_};
    DiagramWord cur = append_swaps(a_, a_swaps_, t.moves);

    const auto f = chain(sides_[0].tree, meet);
    for (std::size_t n = 1; n < f.size(); ++n) {
      t.moves.push_back(f[n]->move);
      const DiagramWord raw = apply_move(f[n]->parent_word, f[n]->move);
      std::vector<std::size_t> swaps;
      win_.canon(raw, swaps);
      cur = append_swaps(raw, swaps, t.moves);
    }

    // Backward tree from the meeting point to its root, undoing each move.
    const auto g = chain(sides_[1].tree, meet);
    for (std::size_t n = g.size() - 1; n >= 1; --n) {
      const Node& node = *g[n];
      const DiagramWord raw = apply_move(node.parent_word, node.move);
      std::vector<std::size_t> swaps;
      win_.canon(raw, swaps);
      append_swaps(cur, reversed(swaps), t.moves);
      t.moves.push_back(inverse_move(node.parent_word, node.move));
      cur = node.parent_word;
    }
    append_swaps(cur, reversed(b_swaps_), t.moves);
    return t;
  }

  const DiagramWord& a_;
  const DiagramWord& b_;
  Window win_;
  int max_events_;
  int max_crossings_;
  int max_depth_;
  std::size_t max_states_;

  std::vector<std::size_t> a_swaps_, b_swaps_;
  Side sides_[2];
  std::optional<std::pair<int, std::string>> best_meet_;  // (total depth, key)
  bool over_budget_ = false;
};

// Frozen context shared by a and b, shrunk by `margin` on each side.
Window window_for(const DiagramWord& a, const DiagramWord& b, int margin) {
  const auto& x = a.events();
  const auto& y = b.events();
  if (margin < 0) return {1, 0};
  const std::size_t limit = std::min(x.size(), y.size());
  std::size_t p = 0;
  while (p < limit && x[p] == y[p]) ++p;
  std::size_t s = 0;
  while (s < limit - std::min(p, limit) && x[x.size() - 1 - s] == y[y.size() - 1 - s]) ++s;
  const auto m = static_cast<std::size_t>(margin);
  p = p > m ? p - m : 0;
  s = s > m ? s - m : 0;
  return {std::max<std::size_t>(p, 1), s};
}

}  // namespace

SearchResult search_equivalent(const DiagramWord& a, const DiagramWord& b,
                               const SearchBudget& budget) {
  if (const auto inv = separating_invariant(a, b)) {
    SearchResult r;
    r.outcome = Outcome::NotEquivalent;
    r.reason = *inv;
    return r;
  }
  const int max_events = budget.max_events > 0
                             ? budget.max_events
                             : static_cast<int>(std::max(a.size(), b.size())) + budget.extra_events;
  const int max_crossings =
      std::min(budget.max_crossings,
               static_cast<int>(std::max(a.crossing_count(), b.crossing_count())) +
                   budget.extra_crossings);

  std::vector<int> margins = budget.windows;
  if (margins.empty()) margins.push_back(-1);
  SearchResult last;
  std::size_t spent = 0;
  std::optional<std::pair<std::size_t, std::size_t>> tried;
  for (const int margin : margins) {
    const Window w = window_for(a, b, margin);
    if (tried && tried->first == w.prefix && tried->second == w.suffix) continue;
    tried = {w.prefix, w.suffix};
    if (spent >= budget.max_states) break;
    WindowSearch search(a, b, w, max_events, max_crossings, budget.max_depth,
                        budget.max_states - spent);
    last = search.run();
    spent += last.states_visited;
    last.states_visited = spent;
    if (last.outcome == Outcome::Equivalent) return last;
    if (margin < 0) break;
  }
  return last;
}

SearchResult search_tangle(const DiagramWord& a, const DiagramWord& b, std::size_t prefix,
                           std::size_t suffix, const SearchBudget& budget) {
  const Window w{std::max<std::size_t>(prefix, 1), suffix};
  if (!w.keeps(a, b) || w.prefix + w.suffix > std::min(a.size(), b.size()))
    throw MoveError("the words do not share the frozen ends");
  if (const auto inv = separating_invariant(a, b)) {
    SearchResult r;
    r.outcome = Outcome::NotEquivalent;
    r.reason = *inv;
    return r;
  }
  const int max_events = budget.max_events > 0
                             ? budget.max_events
                             : static_cast<int>(std::max(a.size(), b.size())) + budget.extra_events;
  const int max_crossings =
      std::min(budget.max_crossings,
               static_cast<int>(std::max(a.crossing_count(), b.crossing_count())) +
                   budget.extra_crossings);
  return WindowSearch(a, b, w, max_events, max_crossings, budget.max_depth, budget.max_states)
      .run();
}

namespace {

int kink_index(KinkType t) {
  for (int i = 0; i < 4; ++i)
    if (kAllKinkTypes[i] == t) return i;
  return -1;
}

// Kink types inserted by stabilize(., s), in order.
std::vector<int> kink_run(StabVector s) {
  std::vector<int> out;
  for (int n = 0; n < std::abs(s.i); ++n) out.push_back(kink_index(s.i > 0 ? KinkType::pp() : KinkType::nn()));
  for (int n = 0; n < std::abs(s.j); ++n) out.push_back(kink_index(s.j > 0 ? KinkType::np() : KinkType::pn()));
  return out;
}

bool opposite(int x, int y) { return (x + 2) % 4 == y; }

DiagramWord unknot_with(const std::vector<int>& kinks) {
  std::vector<Event> ev{{EventKind::Birth, 1}, {EventKind::Death, 1}};
  DiagramWord w(ev);
  std::size_t at = 1;
  for (const int k : kinks) {
    w = insert_kink(w, kAllKinkTypes[k], {at, 1});
    at += 3;
  }
  return w;
}

struct LocalStep {
  std::vector<int> before;  // two kinks
  std::vector<int> after;   // swapped, or empty for a cancellation
};

// Certificates on Cup1 [x][y] Cap1 that never touch the two ends; shared by
// all calls.
std::optional<std::vector<Move>> local_certificate(const LocalStep& step,
                                                   const SearchBudget& budget) {
  static std::mutex lock;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::optional<std::vector<Move>>>
      cache;
  const auto key = std::make_pair(step.before, step.after);
  {
    std::lock_guard<std::mutex> g(lock);
    if (const auto it = cache.find(key); it != cache.end() && it->second) return it->second;
  }
  const SearchResult r =
      search_tangle(unknot_with(step.before), unknot_with(step.after), 1, 1, budget);
  std::optional<std::vector<Move>> moves;
  if (r.outcome == Outcome::Equivalent) moves = r.trace->moves;
  std::lock_guard<std::mutex> g(lock);
  cache[key] = moves;
  return moves;
}

}  // namespace

SearchResult verify_stab_commute(const DiagramWord& d, StabVector s1, StabVector s2,
                                 const SearchBudget& budget) {
  const DiagramWord lhs = stabilize(stabilize(d, s1), s2);
  const DiagramWord rhs = stabilize(d, s1 + s2);

  std::vector<int> run = kink_run(s2);
  for (const int k : kink_run(s1)) run.push_back(k);
  const std::vector<int> target = kink_run(s1 + s2);

  MoveTrace trace{lhs, {}, rhs};
  DiagramWord cur = lhs;
  bool ok = true;
  // Kink p occupies events 1 + 3p .. 3 + 3p.
  const auto apply_step = [&](std::size_t p, const LocalStep& step) {
    const auto local = local_certificate(step, budget);
    if (!local) return false;
    for (Move m : *local) {
      m.index += 3 * p;
      trace.moves.push_back(m);
      cur = apply_move(cur, m);
    }
    run.erase(run.begin() + static_cast<std::ptrdiff_t>(p),
              run.begin() + static_cast<std::ptrdiff_t>(p + 2));
    run.insert(run.begin() + static_cast<std::ptrdiff_t>(p), step.after.begin(),
               step.after.end());
    return true;
  };
  const auto bubble_left = [&](std::size_t from, std::size_t to) {
    for (std::size_t q = from; q > to && ok; --q)
      ok = apply_step(q - 1, {{run[q - 1], run[q]}, {run[q], run[q - 1]}});
  };

  try {
    // Cancel opposite kinks, closest pairs first.
    while (ok) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t x = 0; x < run.size(); ++x)
        for (std::size_t y = x + 1; y < run.size(); ++y)
          if (opposite(run[x], run[y]) && (!best || y - x < best->second - best->first))
            best = {x, y};
      if (!best) break;
      bubble_left(best->second, best->first + 1);
      if (ok) ok = apply_step(best->first, {{run[best->first], run[best->first + 1]}, {}});
    }
    // Sort into the target order.
    for (std::size_t t = 0; t < target.size() && ok; ++t) {
      if (run[t] == target[t]) continue;
      std::size_t from = t + 1;
      while (from < run.size() && run[from] != target[t]) ++from;
      if (from == run.size()) {
        ok = false;
        break;
      }
      bubble_left(from, t);
    }
  } catch (const MoveError&) {
    ok = false;
  }
  if (ok && run == target && cur == rhs && verify(trace)) {
    SearchResult r;
    r.outcome = Outcome::Equivalent;
    r.trace = std::move(trace);
    return r;
  }
  return search_equivalent(lhs, rhs, budget);
}

SearchResult verify_stab_transport(const DiagramWord& a, const DiagramWord& b, StabVector s,
                                   const MoveTrace& trace, const SearchBudget& budget) {
  if (!(trace.start == a) || !(trace.end == b) || !verify(trace))
    throw MoveError("the trace does not certify the given pair");
  const DiagramWord sa = stabilize(a, s);
  const DiagramWord sb = stabilize(b, s);
  const std::size_t shift = sa.size() - a.size();

  MoveTrace moved{sa, {}, sb};
  for (Move m : trace.moves) {
    m.index += shift;
    moved.moves.push_back(m);
  }
  if (verify(moved)) {
    SearchResult r;
    r.outcome = Outcome::Equivalent;
    r.trace = std::move(moved);
    return r;
  }
  return search_equivalent(sa, sb, budget);
}

}  // namespace legknot
