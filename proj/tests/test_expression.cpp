#include <doctest.h>

#include "support.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/expression.hpp"

using namespace weylcoh;
using test::W;

TEST_CASE("parser normal-orders") {
  CHECK(render(W("d1*x1")) == "x1*d1 + 1");
  CHECK(W("x1^2 - 3/2*d2", 2) == W("x1*x1 + (-3/2)*d2", 2));
  CHECK(render(W("x1^2 - 3/2*d2", 2)) == "x1^2 - 3/2*d2");
  CHECK(W("(x1 + d1)^2") == W("x1^2 + 2*x1*d1 + 1 + d1^2"));
  CHECK(W("-(x1)") == W("0 - x1"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(W("x0", 2), ParseError);
  CHECK_THROWS_AS(W("x3", 2), ParseError);
  CHECK_THROWS_AS(W("x1 x1"), ParseError);
  CHECK_THROWS_AS(W("x1^-1"), ParseError);
  CHECK_THROWS_AS(W("1/0"), ParseError);
  CHECK_THROWS_AS(W("x1 +"), ParseError);
  try {
    W("x1 + y1");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("render round-trips") {
  for (const char* s : {"0", "1", "-x1*d2 + 7/5", "x1^3*x2*d1*d2^2 - d2 + 4", "d1*x1*d1*x1"}) {
    WeylElement f = W(s, 2);
    CHECK(W(render(f), 2) == f);
  }
}

TEST_CASE("rows") {
  auto r = parse_row("[d1, -1]", 1);
  REQUIRE(r.size() == 2);
  CHECK(r[1] == W("-1"));
  CHECK(parse_row("x1", 1).size() == 1);
  CHECK(render_row(r) == "[d1, -1]");
  CHECK_THROWS_AS(parse_row("[d1, ]", 1), ParseError);
}
