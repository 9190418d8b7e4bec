#include <doctest.h>

#include <random>
#include <regex>
#include <string>

#include "legknot/corpus.hpp"
#include "legknot/svg.hpp"

using namespace legknot;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

// Segments of a broken under-strand are shorter than a full column.
std::size_t gap_segments(const std::string& s) {
  static const std::regex line(R"re(<line x1="(\d+)" y1="\d+" x2="(\d+)")re");
  std::size_t n = 0;
  for (std::sregex_iterator it(s.begin(), s.end(), line), end; it != end; ++it)
    n += std::stoi((*it)[2]) - std::stoi((*it)[1]) < 40 ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("documents are deterministic and titled") {
  std::mt19937_64 rng(71);
  for (int n = 0; n < 50; ++n) {
    const auto d = random_diagram(rng, {});
    const auto svg = render_svg(d);
    CHECK(svg == render_svg(DiagramWord(d.events())));
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("<title>" + to_string(d) + "</title>") != std::string::npos);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  }
}

TEST_CASE("unknot front is an oval with two cusps") {
  const auto svg = render_svg(unknot_front());
  CHECK(count(svg, "<path") == 2);
  CHECK(count(svg, " Q ") == 4);
  CHECK(count(svg, "<circle") == 1);
}

TEST_CASE("trefoil front has four cusps and three broken crossings") {
  const auto svg = render_svg(right_trefoil_front());
  CHECK(count(svg, "<path") == 4);
  CHECK(gap_segments(svg) == 6);
}

TEST_CASE("a one-kink unknot shows a gap at its crossing") {
  const auto svg = render_svg(parse_diagram("Cup1 Xp1 Cap1"));
  CHECK(count(svg, " C ") == 2);
  CHECK(count(svg, "<line") == 3);
  CHECK(gap_segments(svg) == 2);
}

TEST_CASE("double points get a dot") {
  const auto svg = render_svg(parse_singular("Cup1 Xd1 Cap1"));
  CHECK(count(svg, "<circle") == 2);
  CHECK(count(svg, "<line") == 2);
  CHECK(gap_segments(svg) == 0);
}
