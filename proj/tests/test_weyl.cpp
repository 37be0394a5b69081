#include <doctest.h>

#include "support.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/weyl.hpp"

using namespace weylcoh;
using test::W;

TEST_CASE("normal ordering of products") {
  CHECK(W("d1") * W("x1") == W("x1*d1 + 1"));
  CHECK(W("x1") * W("d1") == W("x1*d1"));
  CHECK(W("d1^2") * W("x1") == W("x1*d1^2 + 2*d1"));
  // d^3 x^2 = x^2 d^3 + 6 x d^2 + 6 d
  CHECK(W("d1^3") * W("x1^2") == W("x1^2*d1^3 + 6*x1*d1^2 + 6*d1"));
  CHECK(W("d1*x2", 2) == W("x2*d1", 2));
}

TEST_CASE("mismatched n is an input error") {
  CHECK_THROWS_AS(multiply(W("x1", 1), W("x1", 2)), InputError);
}

TEST_CASE("transposition") {
  CHECK(transpose(W("x1")) == W("x1"));
  CHECK(transpose(W("d1")) == W("-d1"));
  CHECK(transpose(W("x1*d1")) == W("-x1*d1 - 1"));
  CHECK(transpose(transpose(W("x1^2*d1^3 + 5*d2", 2))) == W("x1^2*d1^3 + 5*d2", 2));
}

TEST_CASE("action on polynomials") {
  CHECK(apply(W("x1*d1"), Polynomial(W("x1^3"))) == Polynomial(W("3*x1^3")));
  CHECK(apply(W("d1", 2), Polynomial(W("x1^2*x2", 2))) == Polynomial(W("2*x1*x2", 2)));
  Polynomial p(W("x1^4 - 7/3*x1*x2^2 + 2", 2));
  CHECK(apply(W("d1*x1 - x1*d1", 2), p) == p);
  CHECK_THROWS_AS(Polynomial(W("d1")), InputError);
}

TEST_CASE("grading degree") {
  CHECK(homogeneous_degree(W("x1^2*d2", 2)) == HomogeneousDegree::of(1));
  CHECK(homogeneous_degree(W("x1*d1 + 1")) == HomogeneousDegree::of(0));
  CHECK(homogeneous_degree(W("x1 + d1")) == HomogeneousDegree::mixed());
  CHECK(homogeneous_degree(WeylElement(1)) == HomogeneousDegree::any());
}

TEST_CASE("order symbol") {
  CHECK(order_symbol(W("x1*d1 + 1")) == order_symbol(W("x1*d1")));
  CHECK(order_symbol(W("d1^2 + x1*d2", 2)) == order_symbol(W("d1^2", 2)));
  CHECK_FALSE(order_symbol(W("d1^2 + x1*d2", 2)) == order_symbol(W("x1*d2", 2)));
  CHECK_THROWS_AS(order_symbol(WeylElement(1)), InputError);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}
