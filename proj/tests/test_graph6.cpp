#include "doctest.h"
#include "gallai/error.hpp"
#include "gallai/generate.hpp"
#include "gallai/graph6.hpp"
#include "support.hpp"

using namespace gallai;

namespace {

ErrorKind parse_error(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("reference encoder agrees on fixed graphs") {
  // the oracle itself, pinned on hand-computed lines
  CHECK(testing::reference_graph6(Graph(5, {})) == "D??");
  CHECK(testing::reference_graph6(Graph(1, {})) == "@");
  // P3: bits (0-1)=1 (0-2)=0 (1-2)=1 -> 101000 = 40 -> 'g'
  CHECK(testing::reference_graph6(generate({.family = Family::Path, .order = 3})) == "Bg");
}

TEST_CASE("parse known lines") {
  auto empty5 = parse_graph6("D??");
  CHECK(empty5.order() == 5);
  CHECK(empty5.edge_count() == 0);

  auto single = parse_graph6("@");
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6(">>graph6<<Bg\n") == generate({.family = Family::Path, .order = 3}));
  CHECK(parse_graph6("Bg\r\n").edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("to_graph6") {
  CHECK(to_graph6(Graph(1, {})) == "@");
  const auto p3 = to_graph6(generate({.family = Family::Path, .order = 3}));
  CHECK(p3.size() == 2);
  CHECK(parse_graph6(p3).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(to_graph6(testing::petersen()) == testing::reference_graph6(testing::petersen()));
  CHECK_THROWS_AS(to_graph6(generate({.family = Family::Path, .order = 63})), Error);
}

TEST_CASE("malformed input") {
  CHECK(parse_error("") == ErrorKind::MalformedHeader);
  CHECK(parse_error(" ??") == ErrorKind::MalformedHeader);
  CHECK(parse_error("~??") == ErrorKind::MalformedHeader);  // long form
  CHECK(parse_error("D?") == ErrorKind::TruncatedBody);
  CHECK(parse_error("D? ") == ErrorKind::InvalidByte);
  CHECK(parse_error("D?\x7f") == ErrorKind::InvalidByte);
  CHECK(parse_error("D???") == ErrorKind::TrailingBytes);
  // order 3 uses 3 of 6 bits; a set padding bit has no canonical meaning
  CHECK(parse_error("B@") == ErrorKind::InvalidByte);
}

TEST_CASE("round trip against the reference encoder") {
  Xoshiro256 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = static_cast<int>(rng.uniform_below(21));
    const Graph g = testing::random_graph(rng, order, rng.uniform_below(5) + 1, 6);
    const std::string line = testing::reference_graph6(g);
    CHECK(to_graph6(g) == line);
    CHECK(parse_graph6(line) == g);
    CHECK(to_graph6(parse_graph6(line)) == line);
  }
  for (int order = 0; order <= kGraph6MaxOrder; ++order) {
    const Graph k = generate({.family = Family::Complete, .order = std::max(order, 1)});
    CHECK(parse_graph6(to_graph6(k)) == k);
  }
}
