#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "golden.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = legknot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden files reproduce byte for byte") {
  const auto cases = golden::load(LEGKNOT_GOLDEN_DIR);
  REQUIRE(cases.size() >= 25);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto o = golden::run(LEGKNOT_GOLDEN_DIR, c);
    CHECK(o.code == c.expected_code);
    CHECK(o.out == c.expected);
  }
}

TEST_CASE("documented values") {
  auto r = run({"invariants", "--front", "L1 R1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["invariants"]["tb"] == -1);
  CHECK(j["invariants"]["maslov"] == 0);

  r = run({"stabilize", "--i", "1", "--j", "1", "--diagram", "Cup1 Cap1"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["delta"]["rotation"] == 0);
  CHECK(j["delta"]["writhe"] == 2);

  r = run({"psi-extend", "--chain", R"({"4": 3, "5": 5})", "--order", "1"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["chain"]["6"] == 7);
}

TEST_CASE("exit codes") {
  CHECK(run({"validate", "--front", "L1 R1"}).code == 0);
  const auto bad = run({"validate", "--front", "L1 R2"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"invariants", "--diagram", "Cup1 Foo"}).code == 1);
  CHECK(run({"invariants", "--nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cusp", "--type", "3", "--front", "L1 R1"}).code == 2);
  CHECK(run({"invariants"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("search output carries a replayable trace") {
  const auto r = run({"search", "--from", "Cup1 Xp1 Xn1 Cap1", "--to", "Cup1 Cap1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["outcome"] == "equivalent");
  std::vector<std::string> args{"apply", "--diagram", "Cup1 Xp1 Xn1 Cap1"};
  for (const auto& m : j["trace"]) {
    args.push_back("--move");
    args.push_back(m.get<std::string>());
  }
  const auto replayed = nlohmann::json::parse(run(args).out);
  CHECK(replayed["word"] == "Cup1 Cap1");
}
