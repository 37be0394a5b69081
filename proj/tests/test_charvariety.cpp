#include <doctest.h>

#include "support.hpp"
#include "weylcoh/charvariety.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/expression.hpp"
#include "weylcoh/rational.hpp"

using namespace weylcoh;

TEST_CASE("symbol ideals") {
  auto r = characteristic_data(test::polynomial_ring(2));
  auto ideal = r.ideal(0);
  REQUIRE(ideal.size() == 2);
  CHECK(render(ideal[0]) != render(ideal[1]));
  for (const auto& s : ideal) CHECK(render(s).find("xi") != std::string::npos);

  CHECK(characteristic_data(test::module(2, {0}, {})).ideal(0).empty());

  auto dx = characteristic_data(test::module(1, {0}, {"x1"}));
  REQUIRE(dx.ideal(0).size() == 1);
  CHECK(render(dx.ideal(0)[0]) == "x1");
}

TEST_CASE("dimensions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = dimension(characteristic_data(test::polynomial_ring(n)));
    CHECK(r.dimension == static_cast<int>(n));
    CHECK(r.holonomic);
    auto d = dimension(characteristic_data(test::module(n, {0}, {})));
    CHECK(d.dimension == static_cast<int>(2 * n));
    CHECK_FALSE(d.holonomic);
  }
  auto dx = dimension(characteristic_data(test::module(1, {0}, {"x1"})));
  CHECK(dx.dimension == 1);
  CHECK(dx.holonomic);
  CHECK(dx.independent_set == std::vector<std::string>{"xi1"});
  for (const char* euler : {"x1*d1", "x1*d1 - 1", "x1*d1 + 3"}) {
    auto e = dimension(characteristic_data(test::module(1, {0}, {euler})));
    CHECK(e.dimension == 1);
  }
  auto zero = dimension(characteristic_data(test::module(1, {0}, {"1"})));
  CHECK(zero.zero_module);
  CHECK_FALSE(zero.dimension.has_value());
  CHECK(zero.holonomic);
}

TEST_CASE("redundant generators do not change the dimension") {
  auto a = dimension(characteristic_data(test::module(2, {0}, {"d1", "d2"})));
  auto b = dimension(characteristic_data(test::module(2, {0}, {"d1", "d2", "x1*d2", "d1*d2 + d2^2"})));
  CHECK(a.dimension == b.dimension);
}

TEST_CASE("Bernstein violation aborts") {
  CharIdeal fake;
  fake.n = 1;
  fake.rank = 1;
  fake.leading = {{WeylMonomial::x_power(1, 0), WeylMonomial::d_power(1, 0)}};
  CHECK_THROWS_AS(dimension(fake), InvariantViolation);
}

TEST_CASE("filtration slices") {
  auto r = dimension_oracle(test::polynomial_ring(2), 6);
  for (int p = 0; p <= 6; ++p) CHECK(Integer(static_cast<unsigned long>(r.dims[p])) == binomial(p + 2, 2));
  auto d = dimension_oracle(test::module(1, {0}, {}), 6);
  for (int p = 0; p <= 6; ++p) CHECK(Integer(static_cast<unsigned long>(d.dims[p])) == binomial(p + 2, 2));
  auto dx = dimension_oracle(test::module(1, {0}, {"x1"}), 6);
  for (int p = 0; p <= 6; ++p) CHECK(dx.dims[p] == static_cast<std::size_t>(p + 1));
  CHECK_FALSE(dx.partial);
}

TEST_CASE("growth slope") {
  auto r3 = dimension_oracle(test::polynomial_ring(3), 12);
  REQUIRE(growth_slope(r3));
  CHECK(*growth_slope(r3) == doctest::Approx(3.0));
  auto e = dimension_oracle(test::module(1, {0}, {"x1*d1"}), 12);
  CHECK(*growth_slope(e) == doctest::Approx(24.0 / 23.0));
}

TEST_CASE("column cap flags partial samples") {
  auto d = dimension_oracle(test::module(2, {0}, {}), 12, 100);
  CHECK(d.partial);
  CHECK(d.dims.size() < 13);
}
