#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "lie/expr.hpp"

namespace lie::testing {

// Random expression over variables x1..xn and the given parameters, built
// from the full grammar (field ops, trig/exp/log atoms, powers).
inline Expr random_expr(Rng& rng, int nvars, int depth = 3) {
  auto leaf = [&]() -> Expr {
    switch (rng.integer(0, 2)) {
      case 0:
        return Expr(rng.rational());
      default:
        return Expr::variable((int)rng.integer(1, nvars));
    }
  };
  std::function<Expr(int)> go = [&](int d) -> Expr {
    if (d <= 0) return leaf();
    switch (rng.integer(0, 9)) {
      case 0:
        return go(d - 1) + go(d - 1);
      case 1:
        return go(d - 1) - go(d - 1);
      case 2:
      case 3:
        return go(d - 1) * go(d - 1);
      case 4: {
        Expr den = go(d - 1);
        if (den.is_zero()) den = Expr(1) + Expr::variable(1) * Expr::variable(1);
        return go(d - 1) / den;
      }
      case 5:
        return Expr::sin_of(go(d - 1));
      case 6:
        return Expr::cos_of(go(d - 1));
      case 7:
        return Expr::exp_of(Expr::variable((int)rng.integer(1, nvars)) * Expr(rng.rational()));
      case 8:
        return Expr::arctan_of(go(d - 1));
      default:
        return go(d - 1).pow_int(rng.integer(1, 3));
    }
  };
  return go(depth);
}

// Central finite-difference check of d(e)/d(x_var) at float points.
// Returns the number of points where the check was evaluable and passed;
// sets *failures to the count of evaluable-but-failing points.
inline int finite_difference_check(const Expr& e, int var, int points, Rng& rng, int* failures,
                                   double tol = 1e-6) {
  Expr de = e.differentiate(var);
  std::set<Symbol> syms;
  e.collect_symbols(syms);
  de.collect_symbols(syms);
  int ok = 0;
  *failures = 0;
  int attempts = 0;
  while (ok + *failures < points && attempts < points * 50) {
    ++attempts;
    EvalPoint p;
    for (const Symbol& s : syms) {
      if (s.kind() == Symbol::Kind::Variable) p.vars[s.var_index()] = rng.rational();
      if (s.kind() == Symbol::Kind::Parameter) p.params[s.param_name()] = rng.rational();
      if (s.kind() == Symbol::Kind::Atom && s.atom_data().kind == AtomKind::Opaque)
        p.set_opaque(s, rng.rational());
    }
    if (!p.vars.count(var)) p.vars[var] = rng.rational();
    const double h = 1e-5;
    try {
      EvalPoint pp = p, pm = p;
      Rational x0 = p.vars[var];
      // shift by +-h exactly via small rationals
      Rational hr(1, 100000);
      pp.vars[var] = x0 + hr;
      pm.vars[var] = x0 - hr;
      double fp = evaluate(e, pp).as_double();
      double fm = evaluate(e, pm).as_double();
      double want = (fp - fm) / (2 * h);
      double got = evaluate(de, p).as_double();
      if (std::abs(want - got) <= tol * (1.0 + std::abs(got)) + 1e-4 * std::abs(fp - fm))
        ++ok;
      else
        ++(*failures);
    } catch (const EvalError&) {
      continue;
    }
  }
  return ok;
}

}  // namespace lie::testing
