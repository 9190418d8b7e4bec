#include <doctest.h>

#include <algorithm>
#include <random>

#include "legknot/convert.hpp"
#include "legknot/corpus.hpp"
#include "legknot/invariants.hpp"
#include "legknot/moves.hpp"
#include "legknot/search.hpp"
#include "legknot/vassiliev.hpp"

using namespace legknot;

namespace {

bool has(const std::vector<Move>& moves, MoveKind k) {
  return std::any_of(moves.begin(), moves.end(), [&](const Move& m) { return m.kind == k; });
}

struct Classical {
  int writhe, rotation, v2, v3;
  bool operator==(const Classical&) const = default;
};

Classical classical(const DiagramWord& d) { return {writhe(d), whitney_rotation(d), v2(d), v3(d)}; }

}  // namespace

TEST_CASE("moves on the round unknot") {
  const auto u = unknot_diagram();
  const auto moves = applicable_moves(u);
  CHECK_FALSE(has(moves, MoveKind::R2Elim));
  CHECK_FALSE(has(moves, MoveKind::R3));
  for (const auto& m : moves) {
    CHECK(is_regular_isotopy(m.kind));
    const auto out = apply_move(u, m);
    CHECK(writhe(out) == 0);
    CHECK(whitney_rotation(out) == 1);
  }
}

TEST_CASE("R2Elim is offered on a cancelling pair and removes it") {
  const auto d = parse_diagram("Cup1 Xp1 Xn1 Cap1");
  CHECK(apply_move(unknot_diagram(), Move{MoveKind::R2IntroPN, 1, 1}) == d);
  const auto moves = applicable_moves(d);
  const auto it = std::find_if(moves.begin(), moves.end(),
                               [](const Move& m) { return m.kind == MoveKind::R2Elim; });
  REQUIRE(it != moves.end());
  CHECK(it->index == 1);
  const auto out = apply_move(d, *it);
  CHECK(out.crossing_count() == 0);
}

TEST_CASE("R3 keeps the crossing count") {
  std::mt19937_64 rng(3);
  int seen = 0;
  for (int n = 0; n < 400 && seen < 30; ++n) {
    const auto d = random_diagram(rng, {10, 6});
    for (const auto& m : applicable_moves(d)) {
      if (m.kind != MoveKind::R3) continue;
      ++seen;
      CHECK(apply_move(d, m).crossing_count() == d.crossing_count());
    }
  }
  CHECK(seen >= 30);
}

TEST_CASE("every enumerated move applies and preserves the invariants") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 60; ++n) {
    const auto d = random_diagram(rng, {10, 6});
    const auto before = classical(d);
    for (const auto& m : applicable_moves(d)) {
      const auto out = apply_move(d, m);
      CHECK(classical(out) == before);
      // The inverse move brings the word back.
      CHECK(apply_move(out, inverse_move(d, m)) == d);
    }
  }
}

TEST_CASE("moves come out sorted and never touch the base point") {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 50; ++n) {
    const auto d = random_diagram(rng, {});
    const auto moves = applicable_moves(d);
    CHECK(std::is_sorted(moves.begin(), moves.end()));
    for (const auto& m : moves) {
      const auto out = apply_move(d, m);
      CHECK(out[0] == d[0]);
    }
  }
}

TEST_CASE("front moves keep tb and rot") {
  std::mt19937_64 rng(23);
  int applied = 0;
  for (int n = 0; n < 80; ++n) {
    const auto f = random_front(rng, {8, 6});
    for (const auto& m : applicable_moves(f)) {
      const auto out = apply_move(f, m);
      CHECK(tb_front(out) == tb_front(f));
      CHECK(rot_front(out) == rot_front(f));
      ++applied;
    }
  }
  CHECK(applied > 200);
}

TEST_CASE("inapplicable moves throw") {
  const auto u = unknot_diagram();
  CHECK_THROWS_AS(apply_move(u, Move{MoveKind::R2Elim, 1, 1}), MoveError);
  CHECK_THROWS_AS(apply_move(u, Move{MoveKind::Commute, 0, 0}), MoveError);
  CHECK_THROWS_AS(parse_move("Teleport 1 1"), Error);
}

TEST_CASE("move text round trip") {
  std::mt19937_64 rng(24);
  const auto d = random_diagram(rng, {8, 6});
  const auto moves = applicable_moves(d);
  CHECK(parse_moves(serialize_moves(moves)) == moves);
  for (const auto& m : moves) CHECK(parse_move(to_string(m)) == m);
}

TEST_CASE("kink examples") {
  const auto u = unknot_diagram();
  const auto a = insert_kink(u, KinkType::pp(), {1, 1});
  CHECK(whitney_rotation(a) == 2);
  CHECK(writhe(a) == 1);
  const auto b = insert_kink(u, KinkType::nn(), {1, 1});
  CHECK(whitney_rotation(b) == 0);
  CHECK(writhe(b) == -1);
  CHECK(whitney_rotation(insert_kink(u, KinkType::np(), {1, 1})) == 0);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto k = insert_kink(u, kAllKinkTypes[i], {1, 2});
    const auto found = kink_at(k, 1);
    REQUIRE(found);
    CHECK(*found == kAllKinkTypes[i]);
  }
  CHECK_THROWS_AS(insert_kink(u, KinkType::pp(), {0, 1}), MoveError);
  CHECK_THROWS_AS(insert_kink(u, KinkType::pp(), {1, 3}), MoveError);
}

TEST_CASE("kink placement does not matter") {
  SearchBudget budget;
  budget.max_depth = 8;
  const std::pair<DiagramWord, std::pair<Location, Location>> cases[] = {
      {unknot_diagram(), {{1, 1}, {1, 2}}},
      {parse_diagram("Cup1 Cup1 Xp2 Cap1 Cap1"), {{1, 1}, {2, 1}}},
  };
  for (const auto& [host, at] : cases) {
    const auto a = insert_kink(host, KinkType::pp(), at.first);
    const auto b = insert_kink(host, KinkType::pp(), at.second);
    CHECK(a != b);
    const auto r = search_equivalent(a, b, budget);
    CHECK(r.outcome == Outcome::Equivalent);
    REQUIRE(r.trace);
    CHECK(verify(*r.trace));
  }
}

TEST_CASE("stabilization examples") {
  std::mt19937_64 rng(25);
  for (int n = 0; n < 20; ++n) {
    const auto d = random_diagram(rng, {8, 6});
    CHECK(stabilize(d, {0, 0}) == d);
    for (int k = 1; k <= 3; ++k) {
      const auto s = stabilize(d, {k, k});
      CHECK(whitney_rotation(s) == whitney_rotation(d));
      CHECK(writhe(s) == writhe(d) + 2 * k);
    }
    const auto m = stabilize(d, {-2, 1});
    CHECK(whitney_rotation(m) == whitney_rotation(d) - 3);
    CHECK(writhe(m) == writhe(d) - 1);
  }
}

TEST_CASE("cusp pair examples") {
  const auto u = unknot_front();
  const auto one = insert_cusp_pair(u, 1, {1, 1});
  CHECK(rot_front(one) == -1);
  CHECK(tb_front(one) == -2);
  const auto two = insert_cusp_pair(u, 2, {1, 1});
  CHECK(rot_front(two) == 1);
  CHECK(tb_front(two) == -2);
  CHECK(count_cusps(one).up + count_cusps(one).down == 4);
  CHECK_THROWS_AS(insert_cusp_pair(u, 3, {1, 1}), MoveError);
  CHECK_THROWS_AS(insert_cusp_pair(u, 1, {1, 5}), MoveError);
}

TEST_CASE("pulling a kink through a double point") {
  const auto sd = parse_singular("Cup1 Xd1 Cap1");
  const auto with = insert_singular_kink(sd, KinkType::pp(), {1, 1});
  REQUIRE(with[4].kind == EventKind::DoublePoint);
  const auto pulled = pull_kink_through_double_point(with, 1);
  CHECK(pulled[1].kind == EventKind::DoublePoint);
  CHECK(pulled.double_point_count() == 1);
  for (const auto& r : all_resolutions(1)) {
    CHECK(classical(resolve(with, r)) == classical(resolve(pulled, r)));
  }
  // and back again
  CHECK(pull_kink_through_double_point(pulled, 2) == with);
  CHECK_THROWS_AS(pull_kink_through_double_point(sd, 1), MoveError);
}

TEST_CASE("pulled kinks keep every alternating sum") {
  std::mt19937_64 rng(26);
  int pulled = 0;
  for (int n = 0; n < 200 && pulled < 40; ++n) {
    const auto sd = random_singular(rng, {5, 6, 2});
    for (std::size_t i = 1; i < sd.size(); ++i) {
      if (sd[i].kind != EventKind::DoublePoint) continue;
      const Location at{i, sd[i].slot};
      const auto with = insert_singular_kink(sd, KinkType::np(), at);
      SingularDiagramWord moved = with;
      bool ok = false;
      for (std::size_t k = i; k + 2 < with.size() && !ok; ++k) {
        try {
          moved = pull_kink_through_double_point(with, k);
          ok = true;
        } catch (const MoveError&) {
        }
      }
      if (!ok) continue;
      ++pulled;
      for (const auto& name : invariant_function_names()) {
        const auto f = invariant_function(name);
        CHECK(alternating_sum(f, with) == alternating_sum(f, moved));
      }
      break;
    }
  }
  CHECK(pulled >= 20);
}

TEST_CASE("trace replay") {
  const auto d = parse_diagram("Cup1 Xp1 Xn1 Cap1");
  const auto moves = applicable_moves(d);
  const Move elim = *std::find_if(moves.begin(), moves.end(),
                                  [](const Move& m) { return m.kind == MoveKind::R2Elim; });
  const MoveTrace good{d, {elim}, apply_move(d, elim)};
  CHECK(verify(good));
  const MoveTrace bad{d, {elim}, d};
  CHECK_FALSE(verify(bad));
  CHECK_THROWS_AS(replay(unknot_diagram(), {elim}), MoveError);
}
