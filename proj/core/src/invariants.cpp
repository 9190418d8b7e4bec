#include "legknot/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "legknot/convert.hpp"
#include "legknot/traversal.hpp"

namespace legknot {

namespace {

using Pattern = std::vector<std::pair<int, bool>>;

// Relabels arrows in order of first appearance.
Pattern normalize(const Pattern& p) {
  std::array<int, 8> relabel;
  relabel.fill(-1);
  int next = 0;
  Pattern out;
  out.reserve(p.size());
  for (const auto& [arrow, tail] : p) {
    if (relabel[arrow] < 0) relabel[arrow] = next++;
    out.emplace_back(relabel[arrow], tail);
  }
  return out;
}

Pattern canonical(Pattern p, bool based) {
  p = normalize(p);
  if (based) return p;
  Pattern best = p;
  for (std::size_t r = 1; r < p.size(); ++r) {
    std::rotate(p.begin(), p.begin() + 1, p.end());
    best = std::min(best, normalize(p));
  }
  return best;
}

int rotation_twice(std::span<const Event> ev) {
  const Traversal t = traverse(ev);
  int sum = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].kind == EventKind::Birth || ev[i].kind == EventKind::Death)
      sum += turn_lower_dir(t, ev, i);
  }
  return sum;
}

}  // namespace

int writhe(const DiagramWord& d) {
  int w = 0;
  for (const auto& e : d.events()) w += crossing_sign(e.kind);
  return w;
}

int whitney_rotation(const DiagramWord& d) { return rotation_twice(d.events()) / 2; }
int whitney_rotation(const SingularDiagramWord& d) { return rotation_twice(d.events()) / 2; }

CuspCounts count_cusps(const FrontWord& f) {
  const auto& ev = f.events();
  const Traversal t = traverse(ev);
  CuspCounts c;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const int lower = ev[i].kind == EventKind::Birth || ev[i].kind == EventKind::Death
                          ? turn_lower_dir(t, ev, i)
                          : 0;
    if (lower == 0) continue;
    // Left cusp with the lower branch heading right is traversed downwards;
    // a right cusp with the lower branch heading right is traversed upwards.
    const bool down = ev[i].kind == EventKind::Birth ? lower > 0 : lower < 0;
    (down ? c.down : c.up) += 1;
  }
  return c;
}

int tb_front(const FrontWord& f) {
  const auto& ev = f.events();
  const Traversal t = traverse(ev);
  int signed_crossings = 0;
  int cusps = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].kind == EventKind::FrontCross)
      signed_crossings += front_crossing_sign(t, ev, i);
    else
      ++cusps;
  }
  return signed_crossings - cusps / 2;
}

int rot_front(const FrontWord& f) {
  const auto c = count_cusps(f);
  return (c.down - c.up) / 2;
}

long long arrow_pairing(const ArrowDiagram& a, const GaussDiagram& g) {
  const int m = static_cast<int>(a.ends.size()) / 2;
  const int n = static_cast<int>(g.chords.size());
  if (m == 0) return 1;
  if (m > n) return 0;

  Pattern target;
  for (const auto& e : a.ends) target.emplace_back(e.arrow, e.tail);
  target = canonical(target, a.based);

  long long total = 0;
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::vector<std::pair<int, std::pair<int, bool>>> ends;
  // Enumerate m-subsets in lexicographic order.
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    ends.clear();
    int sign = 1;
    for (int i = 0; i < m; ++i) {
      const Chord& c = g.chords[pick[i]];
      ends.push_back({c.over_end, {i, true}});
      ends.push_back({c.under_end, {i, false}});
      sign *= c.sign;
    }
    std::sort(ends.begin(), ends.end());
    Pattern p;
    for (const auto& e : ends) p.push_back(e.second);
    if (canonical(p, a.based) == target) total += sign;

    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

// Gauss-diagram formulas. Endpoint letters read along the circle from the
// base point; T = tail (over-passage), H = head (under-passage).
namespace {

const ArrowDiagram kV2Term{{{0, true}, {1, false}, {0, false}, {1, true}}, true};

// v3 = <kV3Half>/2 + <kV3Whole>, both unbased.
const ArrowDiagram kV3Half{
    {{0, false}, {1, false}, {0, true}, {2, false}, {1, true}, {2, true}}, false};
const ArrowDiagram kV3Whole{
    {{0, false}, {1, true}, {2, false}, {0, true}, {1, false}, {2, true}}, false};

}  // namespace

int v2(const GaussDiagram& g) { return static_cast<int>(arrow_pairing(kV2Term, g)); }
int v2(const DiagramWord& d) { return v2(diagram_to_gauss(d)); }

int v3(const GaussDiagram& g) {
  const long long twice = arrow_pairing(kV3Half, g) + 2 * arrow_pairing(kV3Whole, g);
  if (twice % 2 != 0) throw std::logic_error("odd half-weight arrow count");
  return static_cast<int>(twice / 2);
}
int v3(const DiagramWord& d) { return v3(diagram_to_gauss(d)); }

std::vector<InvariantValue> invariant_report(const DiagramWord& d) {
  const GaussDiagram g = diagram_to_gauss(d);
  return {{"writhe", writhe(d)},
          {"rotation", whitney_rotation(d)},
          {"v2", v2(g)},
          {"v3", v3(g)}};
}

std::vector<InvariantValue> invariant_report(const FrontWord& f) {
  const DiagramWord d = front_to_diagram(f);
  const GaussDiagram g = diagram_to_gauss(d);
  return {{"writhe", writhe(d)},       {"rotation", whitney_rotation(d)},
          {"tb", tb_front(f)},         {"maslov", rot_front(f)},
          {"v2", v2(g)},               {"v3", v3(g)}};
}

std::vector<InvariantValue> invariant_report(const SingularDiagramWord& d) {
  return {{"rotation", whitney_rotation(d)}};
}

}  // namespace legknot
