#include <doctest.h>

#include "weylcoh/errors.hpp"
#include "weylcoh/explicit_model.hpp"

using namespace weylcoh;

TEST_CASE("bundled models validate") {
  CHECK_NOTHROW(polynomial_model(1, -3, 6).validate());
  CHECK_NOTHROW(polynomial_model(3, -2, 5).validate());
  CHECK_NOTHROW(laurent_quotient_model(-8, 2).validate());
  CHECK_NOTHROW(euler_model(0, -6, 6).validate());
  CHECK_NOTHROW(euler_model(1, -6, 6).validate());
  CHECK_NOTHROW(euler_model(-3, -6, 6).validate());
  CHECK_NOTHROW(second_derivative_model(-5, 5).validate());
}

TEST_CASE("broken models are rejected") {
  auto m = polynomial_model(1, 0, 4);
  m.d[0][2](0, 0) = 5;  // d(x^2) = 5x instead of 2x
  CHECK_THROWS_AS(m.validate(), ModelInvalid);

  auto two = polynomial_model(2, 0, 4);
  two.d[1][1] = two.d[0][1];  // d2 acts as d1 on M_1
  CHECK_THROWS_AS(two.validate(), ModelInvalid);
}

TEST_CASE("oracle values") {
  // constants of R, n = 1, sit in strand -1
  auto r = polynomial_model(1, -3, 6);
  CHECK(explicit_strand_oracle(r, 0, -1) == 1);
  CHECK(explicit_strand_oracle(r, 0, 0) == 0);
  CHECK(explicit_strand_oracle(r, 1, 0) == 0);

  auto h = laurent_quotient_model(-8, 2);
  CHECK(explicit_strand_oracle(h, 1, -1) == 1);
  CHECK(explicit_strand_oracle(h, 1, -2) == 0);
  CHECK(explicit_strand_oracle(h, 0, -1) == 0);

  // Shifting moves the class: H(-1) has it in strand 0.
  auto shifted = h.shifted(-1);
  CHECK(explicit_strand_oracle(shifted, 1, 0) == 1);
}

TEST_CASE("polynomial ring de Rham in three variables") {
  auto r = polynomial_model(3, -1, 8);
  for (std::size_t i = 0; i <= 3; ++i)
    for (int d = -3; d <= 3; ++d) {
      if (!oracle_covers(r, i, d)) continue;
      CHECK(explicit_strand_oracle(r, i, d) == ((i == 0 && d == -3) ? 1u : 0u));
    }
}

TEST_CASE("coverage") {
  auto r = polynomial_model(1, 0, 3);
  CHECK_FALSE(oracle_covers(r, 0, 3));
  CHECK_THROWS_AS(explicit_strand_oracle(r, 0, 3), InputError);
  CHECK_THROWS_AS(named_model("nonsense", 1, 0, 0, 3), InputError);
  CHECK_THROWS_AS(named_model("laurent-quotient", 2, 0, 0, 3), InputError);
}
