#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano3/errors.hpp"
#include "fano3/nodal.hpp"
#include "fano3/polynomial.hpp"

using namespace fano3;

TEST_CASE("parses the 45-node quartic") {
  const auto f = parse_quartic(kBurkhardtPolynomialText);
  CHECK(f.is_homogeneous_of_degree(4));
  const std::array<Rational, 5> ones = {1, 1, 1, 1, 1};
  CHECK(f.evaluate(ones).is_zero());
  const std::array<Rational, 5> e0 = {1, 0, 0, 0, 0};
  CHECK(f.evaluate(e0) == Rational(1));
  // d f / d x0 at (1,1,1,1,1): 4 - 4 = 0
  CHECK(f.partial(0).evaluate(ones).is_zero());
  CHECK(f.partial(3).evaluate(ones).is_zero());
}

TEST_CASE("grammar essentials") {
  CHECK(parse_polynomial("x3").terms().size() == 1);
  CHECK(parse_polynomial("2/3 * x0 * x1").terms().size() == 1);
  CHECK(parse_polynomial("(x0 + x1) * (x0 - x1)").terms().size() == 2);  // x0^2 - x1^2
  CHECK(parse_polynomial("x0^0").terms().begin()->first == Exponents{0, 0, 0, 0, 0});
  // '^' binds to a variable only
  const auto p = parse_polynomial("x2^3");
  CHECK(p.terms().begin()->first == Exponents{0, 0, 3, 0, 0});
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_polynomial("x5"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x0 +"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("(x0 + x1"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("3x0"), parse_error);   // implicit product
  CHECK_THROWS_AS(parse_polynomial("x0^"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("1/0"), parse_error);
  CHECK_THROWS_AS(parse_polynomial("-x0"), parse_error);   // no unary minus
  CHECK_THROWS_AS(parse_polynomial(""), parse_error);

  try {
    parse_polynomial("x0 * \nx9");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 2);
  }
}

TEST_CASE("the quartic gate rejects non-homogeneous / wrong-degree input") {
  CHECK_THROWS_AS(parse_quartic("x0^3"), parse_error);
  CHECK_THROWS_AS(parse_quartic("x0^4 + x1"), parse_error);
  CHECK_THROWS_AS(parse_quartic("x0^5"), parse_error);
  CHECK_THROWS_AS(parse_quartic("x0^4 - x0^4"), parse_error);  // expands to zero
  CHECK_NOTHROW(parse_quartic("x0^4 + x1^3*x2"));
  CHECK_NOTHROW(parse_quartic("(x0^2 + x1^2) * (x2^2 + x3^2)"));
  // exponents attach to variables only
  CHECK_THROWS_AS(parse_polynomial("(x0 + x1)^2"), parse_error);
}

TEST_CASE("evaluation, gradients and coefficient lifting") {
  const auto f = parse_polynomial("x0^2*x1 + 2*x2^3");
  const std::array<Rational, 5> pt = {2, 3, 1, 0, 0};
  CHECK(f.evaluate(pt) == Rational(14));
  CHECK(f.partial(0).evaluate(pt) == Rational(12));  // 2 x0 x1
  CHECK(f.partial(1).evaluate(pt) == Rational(4));   // x0^2
  CHECK(f.partial(2).evaluate(pt) == Rational(6));   // 6 x2^2

  const auto fe = f.map_coefficients<Eisenstein>([](const Rational& c) { return Eisenstein(c); });
  const Eisenstein w = Eisenstein::omega();
  const std::array<Eisenstein, 5> epr = {w, w * w, Eisenstein(1), Eisenstein(0), Eisenstein(0)};
  // w^2 * w^2 + 2 = w^4 + 2 = w + 2
  CHECK(fe.evaluate(epr) == Eisenstein(Rational(2), Rational(1)));
}
