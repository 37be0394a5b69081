#include <doctest.h>

#include <string>

#include "weylcoh/cases.hpp"
#include "weylcoh/errors.hpp"

using namespace weylcoh;

namespace {

const char* dx_case = R"(
name = D/Dx small
n = 1
rel = "x1"
window = -3 3
margin = 1
model = laurent-quotient -1
expect table [DERIVED]
0: 0 0 0 0 0 0 0
1: 0 0 0 1 0 0 0
end
expect total 1 = 1 [PAPER]
expect dimension 1 [DERIVED]
expect holonomic yes [PAPER]
)";

}  // namespace

TEST_CASE("parsing") {
  auto c = parse_case(dx_case);
  CHECK(c.name == "D/Dx small");
  CHECK(c.window.lo == -3);
  CHECK(c.window.hi == 3);
  CHECK(c.margin == 1);
  REQUIRE(c.model);
  CHECK(c.model->name == "laurent-quotient");
  CHECK(c.model->shift == -1);
  REQUIRE(c.expectations.size() == 4);
  CHECK(c.expectations[0].kind == Expectation::Kind::Table);
  CHECK(c.expectations[1].provenance == Provenance::Paper);
  CHECK(c.expectations[0].table[1][3] == 1);
}

TEST_CASE("untagged expectations are refused") {
  std::string text = dx_case;
  text.replace(text.find("= 1 [PAPER]"), std::string("= 1 [PAPER]").size(), "= 1");
  CHECK_THROWS_AS(parse_case(text), InputError);
  CHECK_THROWS_AS(parse_case("n = 1\nexpect table\n0: 0\nend\n"), InputError);
  CHECK_THROWS_AS(parse_case("n = 1\nwindow = 0 0\nexpect table [DERIVED]\n0: 0\n"), InputError);
  CHECK_THROWS_AS(parse_case("n = 1\nexpect total 0 = 1 [GUESS]\n"), InputError);
}

TEST_CASE("a small case passes") {
  auto r = run_case(parse_case(dx_case));
  CHECK(r.passed);
  CHECK(r.failures.empty());
  CHECK(r.strands_checked > 0);
  CHECK(r.report.find("result: PASS") != std::string::npos);
}

TEST_CASE("corrupted expectations fail with cells") {
  auto c = parse_case(dx_case);
  c.expectations[0].table[1][3] = 0;
  c.expectations[0].table[0][5] = 2;
  auto r = run_case(c);
  CHECK_FALSE(r.passed);
  REQUIRE(r.cells.size() == 2);
  CHECK(r.report.find("result: FAIL") != std::string::npos);
  bool saw_class = false;
  for (const auto& cell : r.cells)
    if (cell.index == 1 && cell.degree == 0) {
      saw_class = true;
      CHECK(cell.expected == 0);
      CHECK(cell.actual == 1);
    }
  CHECK(saw_class);
}

TEST_CASE("bundled library") {
  auto cases = builtin_cases();
  CHECK(cases.size() == 10);
  for (const auto& c : cases)
    for (const auto& e : c.expectations) CHECK(e.line > 0);
}

TEST_CASE("koszul resolution matches the computed one") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto k = koszul_resolution(n);
    CHECK(k.terminated);
    for (const auto& c : builtin_cases())
      if (c.name == "R n=" + std::to_string(n)) CHECK(run_case_with(c, k).passed);
  }
}

TEST_CASE("reports are deterministic") {
  auto c = parse_case(dx_case);
  CHECK(run_case(c, 1).report == run_case(c, 3).report);
}
