#include <doctest.h>

#include "lie/poly.hpp"
#include "lie/ratfunc.hpp"

using namespace lie;

namespace {
Poly sym(const char* name) { return Poly(Symbol::parameter(name)); }
Poly var(int k) { return Poly(Symbol::variable(k)); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly x = var(1), y = var(2);
  Poly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK((x + y).pow(2) == x * x + Poly(2) * x * y + y * y);
  CHECK((p - p).is_zero());
}

TEST_CASE("ordering is deterministic") {
  Poly x = var(1), y = var(2);
  Poly p = x * y + x + Poly(3);
  CHECK(Poly::cmp(p, p) == 0);
  CHECK(Poly::cmp(x, y) != 0);
}

TEST_CASE("divexact") {
  Poly x = var(1), y = var(2);
  Poly a = (x + y).pow(3);
  auto q = Poly::divexact(a, x + y);
  REQUIRE(q.has_value());
  CHECK(*q == (x + y).pow(2));
  CHECK_FALSE(Poly::divexact(x * x + Poly(1), x + Poly(1)).has_value());
}

TEST_CASE("gcd multivariate") {
  Poly x = var(1), y = var(2);
  Poly g = x + y;
  Poly a = g * (x - y);
  Poly b = g * (x + Poly(1));
  Poly got = Poly::gcd(a, b);
  CHECK(got == g);

  // gcd with parameters mixed in
  Poly t = sym("a");
  Poly c = (t * x + Poly(1)) * (x + y);
  Poly d = (t * x + Poly(1)) * y;
  CHECK(Poly::gcd(c, d) == t * x + Poly(1));

  CHECK(Poly::gcd(Poly(), a) == a.primitive());
  CHECK(Poly::gcd(Poly(6), Poly(4)) == Poly(1));
}

TEST_CASE("content and primitive") {
  Poly x = var(1);
  Poly p = Poly(Rational(2, 3)) * x + Poly(Rational(4, 3));
  CHECK(p.content() == Rational(2, 3));
  CHECK(p.primitive() == x + Poly(2));
  Poly n = Poly(-2) * x;
  CHECK(n.primitive() == x);
}

TEST_CASE("ratfunc reduction and canonical denominator") {
  Poly x = var(1), y = var(2);
  RatFunc f(x * x - y * y, x + y);
  CHECK(f == RatFunc(x - y));
  RatFunc g(Poly(1), Poly(1) - x);  // denominator sign flips
  CHECK(g.den().leading_coeff().sign() > 0);
  CHECK(g * RatFunc(Poly(1) - x) == RatFunc(1));
  RatFunc h = RatFunc(x) / RatFunc(x);
  CHECK(h.is_one());
  CHECK_THROWS_AS(RatFunc(x) / RatFunc(0), DomainError);
}

TEST_CASE("ratfunc field ops") {
  Poly x = var(1);
  RatFunc a(Poly(1), x);
  RatFunc b(x, Poly(1));
  CHECK(a * b == RatFunc(1));
  CHECK(a + a == RatFunc(Poly(2), x));
  CHECK((a - a).is_zero());
  RatFunc c = RatFunc(x + Poly(1)).pow(-2);
  CHECK(c == RatFunc(Poly(1), (x + Poly(1)).pow(2)));
}

TEST_CASE("formal derivative") {
  Poly x = var(1), y = var(2);
  Poly p = x * x * y + Poly(3) * x;
  CHECK(p.formal_derivative(Symbol::variable(1)) == Poly(2) * x * y + Poly(3));
  CHECK(p.formal_derivative(Symbol::variable(2)) == x * x);
}
