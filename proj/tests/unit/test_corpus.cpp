#include <doctest.h>

#include <random>
#include <set>

#include "legknot/convert.hpp"
#include "legknot/corpus.hpp"
#include "legknot/invariants.hpp"
#include "walk.hpp"

using namespace legknot;

namespace {

int max_strands(const std::vector<Event>& ev) {
  int best = 0;
  for (int c : oracle::counts_of(ev)) best = std::max(best, c);
  return best;
}

// Independent count: every token sequence within the bounds, kept when the
// walk closes up through every strand.
std::size_t brute_force_count(int crossings, int births, int dps) {
  std::size_t found = 0;
  std::vector<Event> ev{{EventKind::Birth, 1}};
  const auto rec = [&](auto&& self, int n, int b, int c, int d) -> void {
    if (n == 0) {
      if (d == dps && oracle::walk(ev).single_component) ++found;
      return;
    }
    const auto push = [&](Event e, int dn, int db, int dc, int dd) {
      ev.push_back(e);
      self(self, n + dn, b + db, c + dc, d + dd);
      ev.pop_back();
    };
    if (b < births)
      for (int k = 1; k <= n + 1; ++k) push({EventKind::Birth, k}, 2, 1, 0, 0);
    for (int k = 1; k < n; ++k) push({EventKind::Death, k}, -2, 0, 0, 0);
    if (c < crossings)
      for (int k = 1; k < n; ++k) {
        push({EventKind::CrossPos, k}, 0, 0, 1, 0);
        push({EventKind::CrossNeg, k}, 0, 0, 1, 0);
        if (d < dps) push({EventKind::DoublePoint, k}, 0, 0, 1, 1);
      }
  };
  rec(rec, 2, 1, 0, 0);
  return found;
}

}  // namespace

TEST_CASE("random words respect their options and seeds") {
  std::mt19937_64 a(61), b(61);
  for (int n = 0; n < 200; ++n) {
    const auto d = random_diagram(a, {7, 4});
    CHECK(d == random_diagram(b, {7, 4}));
    CHECK(d.crossing_count() <= 7);
    CHECK(max_strands(d.events()) <= 4);
    const auto s = random_singular(a, {5, 6, 3});
    (void)random_singular(b, {5, 6, 3});
    CHECK(s.double_point_count() == 3);
    CHECK(s.crossing_count() <= 8);
    const auto f = random_front(a, {9, 6});
    (void)random_front(b, {9, 6});
    CHECK(f.crossing_count() <= 9);
  }
}

TEST_CASE("enumeration matches a brute-force count") {
  for (const EnumerationBounds bounds : {EnumerationBounds{4, 2, 0}, EnumerationBounds{3, 2, 1},
                                         EnumerationBounds{4, 2, 2}, EnumerationBounds{3, 3, 0}}) {
    std::set<std::vector<Event>> seen;
    std::size_t visits = 0;
    enumerate_words(bounds, [&](const std::vector<Event>& ev) {
      ++visits;
      seen.insert(ev);
      CHECK(oracle::walk(ev).single_component);
    });
    CHECK(visits == seen.size());
    CHECK(visits == brute_force_count(bounds.max_crossings, bounds.max_births,
                                      bounds.double_points));
  }
  CHECK(enumerate_singular({3, 2, 1}).size() == brute_force_count(3, 2, 1));
  CHECK(enumerate_diagrams({3, 2, 0}).size() == brute_force_count(3, 2, 0));
}

TEST_CASE("named examples") {
  CHECK(to_string(unknot_front()) == "L1 R1");
  CHECK(to_string(right_trefoil_front()) == "L1 L1 X2 X2 X2 R1 R1");
  CHECK(to_string(unknot_diagram()) == "Cup1 Cap1");
  CHECK(right_trefoil_diagram() == front_to_diagram(right_trefoil_front()));
  CHECK(writhe(left_trefoil_diagram()) == -3);
  CHECK(figure_eight_diagram().crossing_count() == 4);
}
