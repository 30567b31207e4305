#include <doctest.h>

#include "algebras.hpp"
#include "lie/structure.hpp"

using namespace lie;
using namespace lie::testing;

TEST_CASE("bracket of basis elements") {
  StructureConstants a21 = A2_1();
  CHECK(a21.bracket(basis_vec(2, 1), basis_vec(2, 2)) == basis_vec(2, 1));

  StructureConstants so = so3();
  CHECK(so.bracket(basis_vec(3, 2), basis_vec(3, 3)) == basis_vec(3, 1));
  CHECK(so.bracket(basis_vec(3, 3), basis_vec(3, 1)) == basis_vec(3, 2));

  // [u, u] = 0 for a random element
  Rng rng(5);
  std::vector<Expr> u;
  for (int i = 0; i < 3; ++i) u.push_back(Expr(rng.rational()));
  for (const Expr& e : so.bracket(u, u)) CHECK(e.is_zero());

  CHECK_THROWS_AS(a21.bracket(basis_vec(3, 1), basis_vec(3, 2)), DomainError);
}

TEST_CASE("bracket bilinearity and antisymmetry (random)") {
  Rng rng(17);
  StructureConstants A = sl2();
  for (int t = 0; t < 10; ++t) {
    std::vector<Expr> u, v, w, uw;
    for (int i = 0; i < 3; ++i) {
      u.push_back(Expr(rng.rational()));
      v.push_back(Expr(rng.rational()));
      w.push_back(Expr(rng.rational()));
      uw.push_back(u[i] + w[i]);
    }
    std::vector<Expr> lhs = A.bracket(uw, v);
    std::vector<Expr> r1 = A.bracket(u, v), r2 = A.bracket(w, v);
    std::vector<Expr> anti = A.bracket(v, u);
    for (int i = 0; i < 3; ++i) {
      CHECK(lhs[i] == r1[i] + r2[i]);
      CHECK(anti[i] == -r1[i]);
    }
  }
}

TEST_CASE("jacobi verdicts") {
  CHECK(sl2().jacobi_ok());
  CHECK(abelian(4).jacobi_ok());
  CHECK(so3().jacobi_ok());
  CHECK(A3_4().jacobi_ok());  // identically in the parameter a

  // [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2 violates Jacobi:
  // [[e1,e2],e3]+[[e2,e3],e1]+[[e3,e1],e2] = 0 - e3 - e3 = -2 e3
  StructureConstants bad =
      algebra(3, {{1, 2, {{3, "1"}}}, {1, 3, {{1, "1"}}}, {2, 3, {{2, "1"}}}});
  auto viol = bad.jacobi_violations();
  REQUIRE(!viol.empty());
  CHECK(viol[0].i == 0);
  CHECK(viol[0].j == 1);
  CHECK(viol[0].k == 2);
  CHECK(viol[0].r == 2);
  CHECK(viol[0].residual == Expr(-2));
}

TEST_CASE("change of basis: identity and round trip") {
  StructureConstants A = A4_10();
  CHECK(A.change_basis(Mat::identity(4)) == A);

  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    int pick = (int)rng.integer(0, 2);
    StructureConstants B = pick == 0 ? A2_1() : (pick == 1 ? sl2() : A4_10());
    Mat P = random_invertible(rng, B.dim());
    StructureConstants C = B.change_basis(P).change_basis(P.inverse());
    CHECK(C == B);
  }
  CHECK_THROWS_AS(A.change_basis(Mat(4, 4)), DomainError);  // singular
}

TEST_CASE("change of basis: Bianchi VII to A3.5^b") {
  // h = 6/5 makes b = h/sqrt(4-h^2) = 3/4 rational:
  // [e'1,e'3] = e'2, [e'2,e'3] = -e'1 + h e'2
  StructureConstants bianchi7 =
      algebra(3, {{1, 3, {{2, "1"}}}, {2, 3, {{1, "-1"}, {2, "6/5"}}}});
  // e1 = -(2b/h) e'1 + b e'2, e2 = e'2, e3 = (2b/h) e'3 with 2b/h = 5/4
  ParseContext ctx;
  auto E = [&](const char* s) { return parse_expr(s, ctx); };
  Mat P = Mat::from_rows({{E("-5/4"), E("0"), E("0")},
                          {E("3/4"), E("1"), E("0")},
                          {E("0"), E("0"), E("5/4")}});
  StructureConstants got = bianchi7.change_basis(P);
  StructureConstants want = A3_5().instantiate({{"b", Rational(3, 4)}});
  CHECK(got == want);
}

TEST_CASE("change of basis: sl(2,R) to so(1,2)") {
  ParseContext ctx;
  auto E = [&](const char* s) { return parse_expr(s, ctx); };
  Mat beta = Mat::from_rows({{E("0"), E("1/2"), E("1/2")},
                             {E("1"), E("0"), E("0")},
                             {E("0"), E("-1/2"), E("1/2")}});
  StructureConstants got = sl2().change_basis(beta);
  // [e'1,e'2] = -e'3, [e'2,e'3] = e'1, [e'3,e'1] = e'2
  StructureConstants so12 =
      algebra(3, {{1, 2, {{3, "-1"}}}, {2, 3, {{1, "1"}}}, {1, 3, {{2, "-1"}}}});
  CHECK(got == so12);
}

TEST_CASE("derived series") {
  CHECK(dims(derived_series(A2_1_A1())) == std::vector<int>{3, 1, 0});
  CHECK(dims(derived_series(abelian(4))) == std::vector<int>{4, 0});
  CHECK(dims(derived_series(sl2())) == std::vector<int>{3, 3});
}

TEST_CASE("lower central series") {
  CHECK(dims(lower_central_series(A3_1())) == std::vector<int>{3, 1, 0});
  CHECK(dims(lower_central_series(A2_1_A1())) == std::vector<int>{3, 1, 1});
  CHECK(dims(lower_central_series(abelian(3))) == std::vector<int>{3, 0});
}

TEST_CASE("center and upper central series") {
  CHECK(center(A3_1()) == span_of(3, {1}));
  CHECK(center(abelian(3)) == Subspace::full(3));
  CHECK(center(A2_1_A1()) == span_of(3, {3}));
  auto ucs = upper_central_series(A3_1());
  CHECK(dims(ucs) == std::vector<int>{0, 1, 3});
}

TEST_CASE("bracket / sum / intersect of subspaces") {
  StructureConstants A = A2_1_A1();
  Subspace full = Subspace::full(3);
  CHECK(bracket_subspaces(A, full, full) == span_of(3, {1}));
  CHECK(bracket_subspaces(A, full, Subspace::zero(3)) == Subspace::zero(3));

  CHECK(span_of(3, {1}).sum(span_of(3, {3})) == span_of(3, {1, 3}));
  CHECK(span_of(3, {1, 3}).intersect(span_of(3, {1, 3})) == span_of(3, {1, 3}));

  StructureConstants B = A4_10();
  Subspace I2 = span_of(4, {1, 2, 3});
  Subspace I3 = span_of(4, {1, 2, 4});
  CHECK(bracket_subspaces(B, I2, I3) == span_of(4, {1, 2}));
  CHECK(I2.intersect(I3) == span_of(4, {1, 2}));
}

TEST_CASE("ideal and subalgebra predicates") {
  StructureConstants A = A2_1_A1();
  ParseContext ctx;
  auto E = [&](const char* s) { return parse_expr(s, ctx); };
  // <e1, e2 + 2 e3> is an ideal (Example 2 instance with kappa = 2)
  Subspace S = Subspace::span(
      3, Mat::from_rows({{E("1"), E("0"), E("0")}, {E("0"), E("1"), E("2")}}));
  CHECK(is_ideal(A, S));
  CHECK(is_subalgebra(A, S));

  StructureConstants a21 = A2_1();
  Subspace e2 = span_of(2, {2});
  CHECK(is_subalgebra(a21, e2));
  CHECK_FALSE(is_ideal(a21, e2));

  CHECK(is_ideal(A, Subspace::full(3)));
}

TEST_CASE("solvability and nilpotency") {
  CHECK(is_nilpotent(A3_1()));
  CHECK(is_solvable(A3_1()));
  CHECK_FALSE(is_solvable(sl2()));
  CHECK_FALSE(is_nilpotent(A2_1_A1()));
  CHECK(is_solvable(A2_1_A1()));
  CHECK(is_nilpotent(abelian(3)));
  CHECK(is_solvable(abelian(3)));
}

TEST_CASE("radical and nilradical") {
  CHECK(nilradical(A2_1_A1()) == span_of(3, {1, 3}));
  CHECK(radical(sl2_A1()) == span_of(4, {4}));
  CHECK(nilradical(abelian(3)) == Subspace::full(3));
  CHECK(radical(sl2()).dim() == 0);
  CHECK(nilradical(A4_10()) == span_of(4, {1, 2}));

  CHECK_THROWS_AS(nilradical(A3_4()), DomainError);  // symbolic parameter rejected
  CHECK_THROWS_AS(radical(A3_4()), DomainError);

  // nilradical contains [A,A] for solvable algebras
  for (const StructureConstants& A : {A2_1_A1(), A3_2(), A3_3(), A4_10()}) {
    Subspace der = bracket_subspaces(A, Subspace::full(A.dim()), Subspace::full(A.dim()));
    CHECK(nilradical(A).contains(der));
  }
}

TEST_CASE("killing form values") {
  // so(3): K = -2 I, signature (0,3,0)
  Mat K = killing_form(so3());
  CHECK(K == Mat::identity(3).scale(Expr(-2)));
  CHECK(killing_signature(so3()) == Signature{0, 3, 0});

  CHECK(killing_form(abelian(3)).is_zero());
  CHECK(killing_signature(abelian(3)) == Signature{0, 0, 3});

  // sl(2,R) in the Table 6 basis; oracle by hand from the ad matrices:
  // ad e2 = diag(-1,0,1) so K(e2,e2) = 2; (ad e1)(ad e3) sends e1 -> -2e1,
  // e2 -> -2e2, e3 -> 0, so K(e1,e3) = -4.
  Mat Ksl = killing_form(sl2());
  CHECK(Ksl.at(1, 1) == Expr(2));
  CHECK(Ksl.at(0, 2) == Expr(-4));
  CHECK(Ksl.at(2, 0) == Expr(-4));
  CHECK(Ksl.at(0, 0).is_zero());
  CHECK(Ksl.at(0, 1).is_zero());
  CHECK(Ksl.at(1, 2).is_zero());
  CHECK(Ksl.at(2, 2).is_zero());
  CHECK(killing_signature(sl2()) == Signature{2, 1, 0});

  CHECK_THROWS_AS(killing_signature(A3_4()), DomainError);
}

TEST_CASE("killing signature invariant under basis change") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    int pick = (int)rng.integer(0, 2);
    StructureConstants A = pick == 0 ? sl2() : (pick == 1 ? so3() : A2_1_A1());
    Mat P = random_invertible(rng, 3);
    CHECK(killing_signature(A.change_basis(P)) == killing_signature(A));
  }
}

TEST_CASE("direct sums") {
  CHECK(StructureConstants::direct_sum(A2_1(), abelian(1)) == A2_1_A1());
  // 2A2.1: [e1,e2]=e1, [e3,e4]=e3
  StructureConstants twoA21 = StructureConstants::direct_sum(A2_1(), A2_1());
  StructureConstants want = algebra(4, {{1, 2, {{1, "1"}}}, {3, 4, {{3, "1"}}}});
  CHECK(twoA21 == want);
}

TEST_CASE("series members are ideals, dims monotone") {
  for (const StructureConstants& A : {A2_1_A1(), A3_2(), A4_10(), sl2(), A3_1()}) {
    auto ds = derived_series(A);
    for (const Subspace& s : ds) CHECK(is_ideal(A, s));
    for (size_t i = 1; i < ds.size(); ++i) CHECK(ds[i].dim() <= ds[i - 1].dim());
    auto lcs = lower_central_series(A);
    for (const Subspace& s : lcs) CHECK(is_ideal(A, s));
    for (size_t i = 1; i < lcs.size(); ++i) CHECK(lcs[i - 1].contains(lcs[i]));
    for (const Subspace& s : upper_central_series(A)) CHECK(is_ideal(A, s));
  }
}

TEST_CASE("subalgebra and quotient constants") {
  StructureConstants B = A4_10();
  Subspace I3 = span_of(4, {1, 2, 4});
  StructureConstants sub = subalgebra_constants(B, I3);
  // relabeled (e1,e2,e4): [ê1,ê3] = -ê2, [ê2,ê3] = ê1, i.e. A3.5^0
  StructureConstants a350 = A3_5().instantiate({{"b", Rational(0)}});
  CHECK(sub == a350);

  auto [quot, reps] = quotient_constants(A2_1_A1(), span_of(3, {1}));
  CHECK(quot.dim() == 2);
  CHECK(quot == abelian(2));
  CHECK_THROWS_AS(quotient_constants(A2_1(), span_of(2, {2})), DomainError);
}

TEST_CASE("parameter instantiation") {
  StructureConstants A = A3_4();
  CHECK_FALSE(A.parameter_free());
  StructureConstants B = A.instantiate({{"a", Rational(-1)}});
  CHECK(B.parameter_free());
  CHECK(B.bracket(basis_vec(3, 2), basis_vec(3, 3)) ==
        std::vector<Expr>{Expr(0), Expr(-1), Expr(0)});
}
