#include <doctest.h>

#include <random>

#include "legknot/convert.hpp"
#include "legknot/corpus.hpp"
#include "legknot/gauss.hpp"
#include "legknot/invariants.hpp"
#include "legknot/moves.hpp"
#include "legknot/traversal.hpp"
#include "walk.hpp"

using namespace legknot;

namespace {

// Strand bookkeeping only; may describe links.
std::vector<Event> random_events(std::mt19937_64& rng, int crossings, EventKind cross) {
  std::vector<Event> ev{{EventKind::Birth, 1}};
  int n = 2, left = crossings;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  while (n > 0) {
    const int r = pick(0, 9);
    if (left > 0 && r < 5) {
      ev.push_back({cross, pick(1, n - 1)});
      --left;
    } else if (n < 6 && r < 7) {
      ev.push_back({EventKind::Birth, pick(1, n + 1)});
      n += 2;
    } else {
      ev.push_back({EventKind::Death, pick(1, n - 1)});
      n -= 2;
    }
  }
  return ev;
}

bool accepted(const std::vector<Event>& ev, WordKind kind) {
  try {
    validate_events(ev, kind);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("front words parse and reject bad slots") {
  const FrontWord u = parse_front("L1 R1");
  CHECK(u.size() == 2);
  CHECK(to_string(u) == "L1 R1");
  CHECK_THROWS_AS(parse_front("L1 R2"), ValidationError);
  CHECK_THROWS_AS(parse_front("L1"), ValidationError);
  CHECK_THROWS_AS(parse_front("L1 X2 R1"), ValidationError);
}

TEST_CASE("trefoil front is one component by the walk oracle") {
  const auto f = parse_front("L1 L1 X2 X2 X2 R1 R1");
  CHECK(f.size() == 7);
  CHECK(oracle::walk(f.events()).single_component);
}

TEST_CASE("syntax errors report the token position") {
  try {
    (void)parse_diagram("Cup1 Foo Cap1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_diagram("Cup1 Cap"), ParseError);
  CHECK_THROWS_AS(parse_diagram("Cup0 Cap1"), ParseError);
  CHECK_THROWS_AS(parse_front("Cup1 Cap1"), ParseError);
  CHECK_THROWS_AS(parse_diagram("L1 R1"), ParseError);
}

TEST_CASE("diagram and singular words") {
  CHECK(parse_diagram("Cup1 Cap1").size() == 2);
  // A small curl circle nested inside a large one: two components.
  const std::vector<Event> two{{EventKind::Birth, 1}, {EventKind::Birth, 2},
                               {EventKind::CrossPos, 2}, {EventKind::Death, 2},
                               {EventKind::Death, 1}};
  CHECK_FALSE(oracle::walk(two).single_component);
  CHECK_THROWS_AS(parse_diagram("Cup1 Cup2 Xp2 Cap2 Cap1"), ValidationError);

  const auto s = parse_singular("Cup1 Xd1 Cap1");
  CHECK(s.double_point_count() == 1);
  CHECK(s.crossing_count() == 1);
  CHECK_THROWS_AS(parse_diagram("Cup1 Xd1 Cap1"), ParseError);
  CHECK(parse_singular("Cup1 Xp1 Cap1").double_point_count() == 0);
}

TEST_CASE("stacked cups need a crossing to form a knot") {
  CHECK_THROWS_AS(parse_diagram("Cup1 Cup1 Cap1 Cap1"), ValidationError);
  CHECK_NOTHROW(parse_diagram("Cup1 Cup1 Xp2 Cap1 Cap1"));
}

TEST_CASE("round trip on random words") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 300; ++n) {
    const auto d = random_diagram(rng, {});
    CHECK(to_string(parse_diagram(to_string(d))) == to_string(d));
    CHECK(parse_diagram(to_string(d)) == d);
    const auto f = random_front(rng, {});
    CHECK(parse_front(to_string(f)) == f);
    const auto s = random_singular(rng, {8, 6, 2});
    CHECK(parse_singular(to_string(s)) == s);
  }
}

TEST_CASE("validation agrees with the component oracle") {
  std::mt19937_64 rng(11);
  int links = 0, knots = 0;
  for (int n = 0; n < 2000; ++n) {
    const auto ev = random_events(rng, n % 9, n % 2 ? EventKind::CrossPos : EventKind::CrossNeg);
    const bool one = oracle::walk(ev).single_component;
    (one ? knots : links)++;
    CHECK(accepted(ev, WordKind::Diagram) == one);
    CHECK(traverse(ev).single_component == one);
  }
  CHECK(links > 100);
  CHECK(knots > 100);
}

TEST_CASE("traversal directions match the walk and are deterministic") {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 300; ++n) {
    const auto d = random_diagram(rng, {10, 6});
    const auto t = traverse(d.events());
    const auto w = oracle::walk(d.events());
    for (const auto& [node, dir] : w.direction) CHECK(t.dir(node.first, node.second) == dir);
    const auto again = traverse(d.events());
    CHECK(again.direction == t.direction);
  }
}

TEST_CASE("front_to_diagram examples") {
  const auto u = front_to_diagram(unknot_front());
  CHECK(writhe(u) == -1);
  CHECK(whitney_rotation(u) == 0);
  const auto t = front_to_diagram(right_trefoil_front());
  CHECK(writhe(t) == 1);
  const auto f = insert_cusp_pair(right_trefoil_front(), 1, {1, 1});
  CHECK(writhe(front_to_diagram(f)) == writhe(t) - 1);
}

TEST_CASE("Gauss diagrams") {
  CHECK(diagram_to_gauss(unknot_diagram()).chords.empty());
  for (const KinkType k : kAllKinkTypes) {
    const auto g = diagram_to_gauss(insert_kink(unknot_diagram(), k, {1, 1}));
    REQUIRE(g.chords.size() == 1);
    CHECK(g.chords[0].sign == k.writhe);
  }
  const auto tre = parse_diagram("Cup1 Cup3 Xp2 Xp2 Xp2 Cap1 Cap1");
  const auto g = diagram_to_gauss(tre);
  REQUIRE(g.chords.size() == 3);
  for (const auto& c : g.chords) CHECK(c.sign == 1);

  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    const auto d = random_diagram(rng, {});
    const auto gd = diagram_to_gauss(d);
    CHECK(gd.chords.size() == static_cast<std::size_t>(d.crossing_count()));
    std::vector<int> hits(static_cast<std::size_t>(gd.endpoint_count()), 0);
    for (const auto& c : gd.chords) {
      hits[static_cast<std::size_t>(c.over_end)]++;
      hits[static_cast<std::size_t>(c.under_end)]++;
    }
    for (int h : hits) CHECK(h == 1);
    CHECK(rebase(gd, gd.endpoint_count()) == gd);
  }
}
