#include <doctest.h>

#include "lie/matrix.hpp"

using namespace lie;

namespace {
Expr E(const char* s) {
  ParseContext ctx;
  ctx.params = {"a", "b"};
  return parse_expr(s, ctx);
}
}  // namespace

TEST_CASE("rref, rank, null space") {
  Mat m = Mat::from_rows({{E("1"), E("2"), E("3")},
                          {E("2"), E("4"), E("6")},
                          {E("1"), E("0"), E("1")}});
  auto ech = m.echelon();
  CHECK(ech.rank == 2);
  Mat ns = m.null_space();
  CHECK(ns.rows() == 1);
  // kernel spanned by (-1, -1, 1) up to scale; canonical leading 1
  std::vector<Expr> v = ns.row(0);
  std::vector<Expr> img = m.apply(v);
  for (const Expr& e : img) CHECK(e.is_zero());
}

TEST_CASE("determinant and inverse") {
  Mat m = Mat::from_rows({{E("1"), E("2")}, {E("3"), E("4")}});
  CHECK(m.det() == E("-2"));
  Mat inv = m.inverse();
  CHECK(m * inv == Mat::identity(2));

  Mat sing = Mat::from_rows({{E("1"), E("2")}, {E("2"), E("4")}});
  CHECK(sing.det().is_zero());
  CHECK_THROWS_AS(sing.inverse(), DomainError);
}

TEST_CASE("parametric elimination") {
  // pivots can carry parameters; audit records them
  Mat m = Mat::from_rows({{E("a"), E("1")}, {E("0"), E("b")}});
  auto ech = m.echelon();
  CHECK(ech.rank == 2);
  REQUIRE(ech.pivots.size() == 2);
  CHECK(ech.pivots[0] == E("a"));
  CHECK(m.det() == E("a*b"));
}

TEST_CASE("subspace canonical form and equality") {
  Mat r1 = Mat::from_rows({{E("1"), E("1"), E("0")}, {E("0"), E("2"), E("0")}});
  Mat r2 = Mat::from_rows({{E("1"), E("0"), E("0")}, {E("3"), E("1"), E("0")}});
  Subspace s1 = Subspace::span(3, r1);
  Subspace s2 = Subspace::span(3, r2);
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains({E("5"), E("-7"), E("0")}));
  CHECK_FALSE(s1.contains({E("0"), E("0"), E("1")}));
}

TEST_CASE("subspace lattice") {
  Subspace a = Subspace::span(3, Mat::from_rows({{E("1"), E("0"), E("0")}}));
  Subspace b = Subspace::span(3, Mat::from_rows({{E("0"), E("1"), E("0")}}));
  Subspace ab = a.sum(b);
  CHECK(ab.dim() == 2);
  CHECK(ab.intersect(a) == a);
  CHECK(a.intersect(b).dim() == 0);

  Subspace diag = Subspace::span(3, Mat::from_rows({{E("1"), E("1"), E("0")}}));
  CHECK(ab.contains(diag));
  CHECK(ab.intersect(diag) == diag);
}

TEST_CASE("image under matrix") {
  Mat m = Mat::from_rows({{E("0"), E("1")}, {E("1"), E("0")}});
  Subspace s = Subspace::span(2, Mat::from_rows({{E("1"), E("0")}}));
  Subspace img = s.image_under(m);
  CHECK(img == Subspace::span(2, Mat::from_rows({{E("0"), E("1")}})));
}

TEST_CASE("subspace deterministic ordering") {
  Subspace a = Subspace::span(2, Mat::from_rows({{E("1"), E("0")}}));
  Subspace b = Subspace::span(2, Mat::from_rows({{E("0"), E("1")}}));
  CHECK(Subspace::cmp(a, b) != 0);
  CHECK(Subspace::cmp(a, a) == 0);
  CHECK(Subspace::cmp(a, b) == -Subspace::cmp(b, a));
}
