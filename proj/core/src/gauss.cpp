#include "legknot/gauss.hpp"

#include <map>

#include "legknot/traversal.hpp"

namespace legknot {

GaussDiagram diagram_to_gauss(const DiagramWord& d) {
  const auto& ev = d.events();
  const Traversal t = traverse(ev);
  GaussDiagram g;
  std::map<std::size_t, std::size_t> chord_of_event;
  for (std::size_t pos = 0; pos < t.passages.size(); ++pos) {
    const Passage& p = t.passages[pos];
    auto [it, fresh] = chord_of_event.try_emplace(p.event, g.chords.size());
    if (fresh) g.chords.push_back({-1, -1, crossing_sign(ev[p.event].kind)});
    Chord& c = g.chords[it->second];
    const bool over = p.lower_line == lower_line_over(t, ev, p.event);
    (over ? c.over_end : c.under_end) = static_cast<int>(pos);
  }
  return g;
}

GaussDiagram rebase(const GaussDiagram& g, int shift) {
  const int m = g.endpoint_count();
  GaussDiagram out = g;
  if (m == 0) return out;
  const auto move = [&](int p) { return ((p - shift) % m + m) % m; };
  for (auto& c : out.chords) {
    c.over_end = move(c.over_end);
    c.under_end = move(c.under_end);
  }
  return out;
}

}  // namespace legknot
