#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lie/structure.hpp"

namespace lie::testing {

struct Br {
  int i, j;  // 1-based, as in the tables
  std::vector<std::pair<int, std::string>> terms;
};

inline StructureConstants algebra(int dim, std::initializer_list<Br> brs,
                                  std::vector<std::string> params = {}) {
  ParseContext ctx;
  for (const std::string& p : params) ctx.params.insert(p);
  std::vector<BracketEntry> entries;
  for (const Br& b : brs) {
    BracketEntry e{b.i - 1, b.j - 1, {}};
    for (const auto& [k, coeff] : b.terms) e.coeffs.push_back({k - 1, parse_expr(coeff, ctx)});
    entries.push_back(e);
  }
  return StructureConstants::from_brackets(dim, entries, params);
}

inline StructureConstants abelian(int m) { return StructureConstants(m); }

inline StructureConstants A2_1() { return algebra(2, {{1, 2, {{1, "1"}}}}); }
inline StructureConstants A2_1_A1() { return algebra(3, {{1, 2, {{1, "1"}}}}); }
inline StructureConstants A3_1() { return algebra(3, {{2, 3, {{1, "1"}}}}); }
inline StructureConstants A3_2() {
  return algebra(3, {{1, 3, {{1, "1"}}}, {2, 3, {{1, "1"}, {2, "1"}}}});
}
inline StructureConstants A3_3() { return algebra(3, {{1, 3, {{1, "1"}}}, {2, 3, {{2, "1"}}}}); }
inline StructureConstants A3_4() {
  return algebra(3, {{1, 3, {{1, "1"}}}, {2, 3, {{2, "a"}}}}, {"a"});
}
inline StructureConstants A3_5() {
  return algebra(3, {{1, 3, {{1, "b"}, {2, "-1"}}}, {2, 3, {{1, "1"}, {2, "b"}}}}, {"b"});
}
inline StructureConstants sl2() {
  return algebra(3, {{1, 2, {{1, "1"}}}, {2, 3, {{3, "1"}}}, {1, 3, {{2, "2"}}}});
}
inline StructureConstants so3() {
  return algebra(3, {{2, 3, {{1, "1"}}}, {1, 3, {{2, "-1"}}}, {1, 2, {{3, "1"}}}});
}
inline StructureConstants A4_10() {
  return algebra(4, {{1, 3, {{1, "1"}}},
                     {2, 3, {{2, "1"}}},
                     {1, 4, {{2, "-1"}}},
                     {2, 4, {{1, "1"}}}});
}
inline StructureConstants sl2_A1() {
  return algebra(4, {{1, 2, {{1, "1"}}}, {2, 3, {{3, "1"}}}, {1, 3, {{2, "2"}}}});
}
inline StructureConstants so3_A1() {
  return algebra(4, {{2, 3, {{1, "1"}}}, {1, 3, {{2, "-1"}}}, {1, 2, {{3, "1"}}}});
}

inline std::vector<Expr> basis_vec(int m, int i /*1-based*/) {
  std::vector<Expr> v(m);
  v[i - 1] = Expr(1);
  return v;
}

inline Subspace span_of(int m, std::initializer_list<int> unit_indices /*1-based*/) {
  std::vector<std::vector<Expr>> rows;
  for (int i : unit_indices) rows.push_back(basis_vec(m, i));
  return Subspace::span(m, Mat::from_rows(rows));
}

inline std::vector<int> dims(const std::vector<Subspace>& ss) {
  std::vector<int> d;
  for (const Subspace& s : ss) d.push_back(s.dim());
  return d;
}

inline Mat random_invertible(Rng& rng, int n) {
  for (int tries = 0; tries < 200; ++tries) {
    Mat P(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) P.at(i, j) = Expr(Rational(rng.integer(-3, 3)));
    if (!P.det().is_zero()) return P;
  }
  return Mat::identity(n);
}

}  // namespace lie::testing
