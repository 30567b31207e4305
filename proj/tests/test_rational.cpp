#include <doctest.h>

#include "lie/rational.hpp"

using lie::Rational;

TEST_CASE("normalization") {
  Rational q(6, -4);
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), lie::DomainError);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), lie::DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), lie::DomainError);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK_THROWS_AS(a / Rational(0), lie::DomainError);
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("floor and frac") {
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
}

TEST_CASE("exact roots") {
  Rational r;
  CHECK(Rational(4, 9).exact_root(2, r));
  CHECK(r == Rational(2, 3));
  CHECK_FALSE(Rational(2).exact_root(2, r));
  CHECK(Rational(27).exact_root(3, r));
  CHECK(r == Rational(3));
}

TEST_CASE("content gcd") {
  CHECK(Rational::content_gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
  CHECK(Rational::content_gcd(Rational(0), Rational(-5, 7)) == Rational(5, 7));
}
