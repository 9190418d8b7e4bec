#include "legknot/convert.hpp"

#include "move_detail.hpp"

namespace legknot {

DiagramWord front_to_diagram(const FrontWord& f) {
  const auto& ev = f.events();
  const Traversal t = traverse(ev);
  std::vector<Event> out;
  out.reserve(ev.size() * 2);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const Event& e = ev[i];
    switch (e.kind) {
      case EventKind::Birth:
        out.push_back(e);
        break;
      case EventKind::FrontCross:
        out.push_back({front_crossing_sign(t, ev, i) > 0 ? EventKind::CrossPos
                                                          : EventKind::CrossNeg,
                       e.slot});
        break;
      case EventKind::Death: {
        const int lower = turn_lower_dir(t, ev, i);
        const KinkType kink = lower > 0 ? KinkType::nn() : KinkType::pn();
        const bool above = kink.rotation * lower > 0;
        const auto c = detail::curl(e.slot, above, EventKind::CrossNeg);
        out.insert(out.end(), c.begin(), c.end());
        out.push_back(e);
        break;
      }
      default:
        break;
    }
  }
  return DiagramWord(std::move(out));
}

Location map_front_location(const FrontWord& f, Location at) {
  std::size_t deaths = 0;
  for (std::size_t i = 0; i < at.index && i < f.size(); ++i)
    deaths += f[i].kind == EventKind::Death ? 1 : 0;
  return {at.index + 3 * deaths, at.slot};
}

}  // namespace legknot
