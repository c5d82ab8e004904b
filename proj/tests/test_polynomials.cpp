#include "doctest.h"
#include "oracles.hpp"

#include "schubert/errors.hpp"
#include "schubert/localized.hpp"
#include "schubert/polynomial.hpp"

using namespace schubert;

namespace tests {

namespace {

const Polynomial x1 = Polynomial::x(1), x2 = Polynomial::x(2), y1 = Polynomial::y(1),
                 t1 = Polynomial::t(1), t2 = Polynomial::t(2), b = Polynomial::beta();

const std::vector<Family> kAll = {Family::X, Family::Y, Family::T, Family::Beta};

} // namespace

TEST_CASE("arithmetic examples") {
  CHECK((x1 - y1) + (y1 - t1) == x1 - t1);
  CHECK((x1 - y1) * (x1 - t1) == x1 * x1 - (y1 + t1) * x1 + y1 * t1);
  const Polynomial p = Polynomial(3) * b * x1 * t2;
  CHECK((p + -p).is_zero());
}

TEST_CASE("coefficients are arbitrary precision") {
  Polynomial p = (x1 + y1).pow(60);
  CHECK(p.coefficient(Monomial::from_entries({{Var::x(1), 30}, {Var::y(1), 30}})) ==
        mpz_class("118264581564861424"));
  CHECK(exact_divide(p, (x1 + y1).pow(59)) == x1 + y1);
}

TEST_CASE("substitution examples") {
  CHECK(substitute(x1 - t1, {{Var::x(1), t2}}) == t2 - t1);
  CHECK(substitute(x1 - y1, {{Var::y(1), Polynomial(0)}}) == x1);
  CHECK(substitute(Polynomial::t(3) - t1, {{Var::t(3), y1}}) == y1 - t1);
}

TEST_CASE("exact division examples") {
  CHECK(exact_divide(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
  CHECK(exact_divide((x1 - t1) * (x1 - t2), x1 - t2) == x1 - t1);
  CHECK_THROWS_AS(exact_divide(x1 - y1, x1 - x2), NotDivisible);
  CHECK_FALSE(try_divide(x1 - y1, x1 - x2).has_value());
}

TEST_CASE("parse and render examples") {
  CHECK(parse_polynomial("x1*x1 - 2*x1*t1 + t1^2") == (x1 - t1) * (x1 - t1));
  CHECK(render(Polynomial{}) == "0");
  CHECK(parse_polynomial("b*x1 + x1") == b * x1 + x1);
  CHECK(render(x1 - y1) == "x1 - y1");
  CHECK(render(t2 - y1) == "t2 - y1");
  CHECK(render(parse_polynomial(" -3*x1^2 + (x1-y1)*(x1+y1) ")) == "-2*x1^2 - y1^2");
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_polynomial("x1 + * y1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("z1"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("(x1"), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x0"), SyntaxError);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const auto p = oracle::random_polynomial(rng, kAll, 4, 3);
    const auto q = oracle::random_polynomial(rng, kAll, 4, 3);
    const auto r = oracle::random_polynomial(rng, kAll, 4, 3);
    REQUIRE((p + q) + r == p + (q + r));
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p + q == q + p);
    REQUIRE(p * q == q * p);
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE(p - p == Polynomial{});
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto p = oracle::random_polynomial(rng, kAll, 4, 3);
    auto q = oracle::random_polynomial(rng, kAll, 3, 2);
    if (q.is_zero()) q = Polynomial(7);
    REQUIRE(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("render then parse is the identity") {
  std::mt19937 rng(13);
  for (int k = 0; k < 500; ++k) {
    const auto p = oracle::random_polynomial(rng, kAll, 5, 4);
    REQUIRE(parse_polynomial(render(p)) == p);
  }
}

TEST_CASE("term order is graded lex with x < t < y < b") {
  const auto p = parse_polynomial("b + y1 + t1 + x2 + x1 + x1*y1");
  CHECK(render(p) == "x1*y1 + x1 + x2 + t1 + y1 + b");
}

TEST_CASE("localized examples") {
  const LocalizedElement a(t1 - y1, {{1, 1}}, {});
  const LocalizedElement sum = a + LocalizedElement(x1 - t1);
  CHECK(sum.denom_y() == LocalizedElement::Exponents{{1, 1}});
  CHECK(oracle::localized_equal(sum, LocalizedElement((t1 - y1) + (x1 - t1) * unit_factor(Var::y(1)), {{1, 1}}, {})));
  const auto unreduced = LocalizedElement::unreduced(unit_factor(Var::y(1)) * (x1 - y1), {{1, 2}}, {});
  const auto reduced = frac_reduce(unreduced);
  CHECK(reduced.numerator() == x1 - y1);
  CHECK(reduced.denom_y() == LocalizedElement::Exponents{{1, 1}});
  CHECK(beta_zero(a) == t1 - y1);
  CHECK(render(a) == "(t1 - y1) / ((1+b*y1))");
  CHECK(render(LocalizedElement(x1, {{1, 2}}, {{3, 1}})) == "x1 / ((1+b*y1)^2*(1+b*t3))");
}

TEST_CASE("localized arithmetic properties") {
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> exponent(0, 2);
  const auto random_element = [&] {
    LocalizedElement::Exponents dy, dt;
    for (int j = 1; j <= 2; ++j)
      if (int e = exponent(rng)) dy[j] = e;
    if (int e = exponent(rng)) dt[1] = e;
    return LocalizedElement(oracle::random_polynomial(rng, kAll, 3, 2, 2), dy, dt);
  };
  for (int k = 0; k < 200; ++k) {
    const auto a = random_element(), c = random_element();
    REQUIRE(frac_reduce(frac_reduce(a)) == frac_reduce(a));
    REQUIRE(frac_reduce(a) == a);
    REQUIRE(beta_zero(a + c) == beta_zero(a) + beta_zero(c));
    REQUIRE(beta_zero(a * c) == beta_zero(a) * beta_zero(c));
    REQUIRE(oracle::localized_equal(a * c, c * a));
    REQUIRE(oracle::localized_equal((a + c) - c, a));
    const auto p = oracle::random_polynomial(rng, kAll, 3, 2);
    const auto q = oracle::random_polynomial(rng, kAll, 3, 2);
    REQUIRE(LocalizedElement(p) + LocalizedElement(q) == LocalizedElement(p + q));
    REQUIRE(LocalizedElement(p) * LocalizedElement(q) == LocalizedElement(p * q));
  }
}

TEST_CASE("localized division peels unit factors") {
  const auto u = unit_factor(Var::y(1));
  const LocalizedElement num((x1 - y1) * (x2 - y1));
  const LocalizedElement den((x1 - y1) * u);
  const auto q = divide(num, den);
  CHECK(q.numerator() == x2 - y1);
  CHECK(q.denom_y() == LocalizedElement::Exponents{{1, 1}});
  CHECK_THROWS_AS(divide(LocalizedElement(x1), LocalizedElement(x1 + x2)), NotDivisible);
}

} // namespace tests
