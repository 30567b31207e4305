#include "lie/expr.hpp"

#include <cmath>
#include <sstream>

namespace lie {

// --- symbols -----------------------------------------------------------------

Symbol Symbol::variable(int index) {
  Symbol s;
  s.kind_ = Kind::Variable;
  s.var_ = index;
  return s;
}

Symbol Symbol::parameter(std::string name) {
  Symbol s;
  s.kind_ = Kind::Parameter;
  s.name_ = std::move(name);
  return s;
}

Symbol Symbol::atom(std::shared_ptr<const AtomData> data) {
  Symbol s;
  s.kind_ = Kind::Atom;
  s.atom_ = std::move(data);
  return s;
}

int symbol_cmp(const Symbol& a, const Symbol& b) {
  if (a.kind() != b.kind()) return (int)a.kind() < (int)b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Symbol::Kind::Variable:
      return a.var_index() == b.var_index() ? 0 : (a.var_index() < b.var_index() ? -1 : 1);
    case Symbol::Kind::Parameter:
      return a.param_name().compare(b.param_name()) < 0   ? -1
             : a.param_name().compare(b.param_name()) > 0 ? 1
                                                          : 0;
    case Symbol::Kind::Atom: {
      if (a.atom_ptr().get() == b.atom_ptr().get()) return 0;
      return atom_cmp(a.atom_data(), b.atom_data());
    }
  }
  return 0;
}

int atom_cmp(const AtomData& a, const AtomData& b) {
  if (a.kind != b.kind) return (int)a.kind < (int)b.kind ? -1 : 1;
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  if (a.deriv != b.deriv) return a.deriv < b.deriv ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (int c = RatFunc::cmp(a.args[i], b.args[i]); c != 0) return c;
  return RatFunc::cmp(a.exponent, b.exponent);
}

namespace {

Symbol make_atom_symbol(AtomKind kind, std::vector<RatFunc> args, RatFunc exponent = RatFunc(0),
                        std::string name = {}, std::vector<int> deriv = {}) {
  auto d = std::make_shared<AtomData>();
  d->kind = kind;
  d->name = std::move(name);
  d->args = std::move(args);
  d->exponent = std::move(exponent);
  d->deriv = std::move(deriv);
  return Symbol::atom(std::move(d));
}

RatFunc rf_symbol(const Symbol& s) { return RatFunc(s); }

// exp(w)^c for primitive direction w; c rational, possibly fractional.
RatFunc exp_power(const RatFunc& w, const Rational& c);

// Interned exponential of a canonical argument (additivity applied).
RatFunc intern_exp(const RatFunc& u) {
  if (u.is_zero()) return RatFunc(1);
  RatFunc r(1);
  if (u.is_poly() && u.den().constant_value().is_one()) {
    for (const auto& [m, q] : u.num().terms()) {
      RatFunc w = m.is_unit() ? RatFunc(1) : RatFunc(Poly::from_terms({{m, Rational(1)}}));
      r = r * exp_power(w, q);
    }
    return r;
  }
  Rational c;
  RatFunc w;
  u.primitive_decompose(c, w);
  return exp_power(w, c);
}

RatFunc intern_pow(const RatFunc& base, const RatFunc& expo);

RatFunc exp_power(const RatFunc& w, const Rational& c) {
  if (c.is_zero()) return RatFunc(1);
  Symbol e = make_atom_symbol(AtomKind::Exp, {w});
  Rational n = c.floor();
  Rational f = c - n;
  RatFunc r = rf_symbol(e).pow(n.to_long());
  if (!f.is_zero())
    r = r * rf_symbol(make_atom_symbol(AtomKind::Pow, {rf_symbol(e)}, RatFunc(f)));
  return r;
}

RatFunc intern_ln(const RatFunc& u) {
  if (u.is_zero()) throw DomainError("ln(0)");
  if (u.is_one()) return RatFunc(0);
  if (u.is_constant() && u.constant_value().sign() < 0) throw DomainError("ln of negative constant");
  // ln(prod exp(w_i)^{k_i} * pow(exp(w_j), f_j)) = sum k_i w_i + sum f_j w_j
  {
    RatFunc acc(0);
    bool pure = true;
    auto scan = [&](const Poly& p, int side) {
      if (!pure) return;
      if (p.is_zero() || p.terms().size() != 1) { pure = false; return; }
      const auto& [m, c] = p.terms()[0];
      if (!c.is_one()) { pure = false; return; }
      for (const auto& [s, e] : m.factors()) {
        if (s.kind() != Symbol::Kind::Atom) { pure = false; return; }
        const AtomData& d = s.atom_data();
        if (d.kind == AtomKind::Exp) {
          acc = acc + d.args[0] * RatFunc(Rational(side * e));
        } else if (d.kind == AtomKind::Pow) {
          Symbol inner;
          if (!d.args[0].is_single_symbol(inner) || inner.kind() != Symbol::Kind::Atom ||
              inner.atom_data().kind != AtomKind::Exp) {
            pure = false;
            return;
          }
          acc = acc + inner.atom_data().args[0] * d.exponent * RatFunc(Rational(side * e));
        } else {
          pure = false;
          return;
        }
      }
    };
    scan(u.num(), 1);
    scan(u.den(), -1);
    if (pure) return acc;
  }
  return rf_symbol(make_atom_symbol(AtomKind::Ln, {u}));
}

// Sign-normalizing unary atoms: sin, arctan odd; cos even.
RatFunc intern_sin(const RatFunc& u) {
  if (u.is_zero()) return RatFunc(0);
  Rational c;
  RatFunc w;
  u.primitive_decompose(c, w);
  RatFunc arg = w * RatFunc(c.abs());
  RatFunc s = rf_symbol(make_atom_symbol(AtomKind::Sin, {arg}));
  return c.sign() < 0 ? -s : s;
}

RatFunc intern_cos(const RatFunc& u) {
  if (u.is_zero()) return RatFunc(1);
  Rational c;
  RatFunc w;
  u.primitive_decompose(c, w);
  return rf_symbol(make_atom_symbol(AtomKind::Cos, {w * RatFunc(c.abs())}));
}

RatFunc intern_arctan(const RatFunc& u) {
  if (u.is_zero()) return RatFunc(0);
  Rational c;
  RatFunc w;
  u.primitive_decompose(c, w);
  RatFunc s = rf_symbol(make_atom_symbol(AtomKind::ArcTan, {w * RatFunc(c.abs())}));
  return c.sign() < 0 ? -s : s;
}

bool exponent_is_admissible(const RatFunc& e) {
  std::set<Symbol> syms;
  e.collect_symbols(syms);
  for (const Symbol& s : syms)
    if (s.kind() != Symbol::Kind::Parameter) return false;
  return true;
}

RatFunc intern_pow(const RatFunc& base, const RatFunc& expo) {
  if (!exponent_is_admissible(expo))
    throw DomainError("power exponent must be a rational/parameter expression");
  if (expo.is_zero()) return RatFunc(1);
  if (base.is_one()) return RatFunc(1);
  if (base.is_zero()) {
    if (expo.is_constant() && expo.constant_value().sign() <= 0)
      throw DomainError("0 raised to non-positive power");
    return RatFunc(0);
  }
  if (expo.is_constant()) {
    Rational q = expo.constant_value();
    if (q.is_integer()) return base.pow(q.to_long());
    if (base.is_constant()) {
      Rational b = base.constant_value();
      if (b.sign() < 0) throw DomainError("fractional power of negative constant");
      // try exact root: b^(p/r)
      Rational root;
      unsigned long r = 0;
      if (q.den().fits_ulong_p()) r = q.den().get_ui();
      if (r != 0 && b.exact_root(r, root)) return RatFunc(root.pow(q.num().get_si()));
    }
    Symbol s;
    if (base.is_single_symbol(s) && s.kind() == Symbol::Kind::Atom) {
      const AtomData& d = s.atom_data();
      if (d.kind == AtomKind::Exp) return intern_exp(d.args[0] * expo);
      if (d.kind == AtomKind::Pow) return intern_pow(d.args[0], d.exponent * expo);
    }
    Rational n = q.floor();
    Rational f = q - n;
    RatFunc r = base.pow(n.to_long());
    if (!f.is_zero())
      r = r * rf_symbol(make_atom_symbol(AtomKind::Pow, {base}, RatFunc(f)));
    return r;
  }
  // symbolic exponent
  Symbol s;
  if (base.is_single_symbol(s) && s.kind() == Symbol::Kind::Atom) {
    const AtomData& d = s.atom_data();
    if (d.kind == AtomKind::Exp) return intern_exp(d.args[0] * expo);
    if (d.kind == AtomKind::Pow) return intern_pow(d.args[0], d.exponent * expo);
  }
  return rf_symbol(make_atom_symbol(AtomKind::Pow, {base}, expo));
}

// --- rewrite fixpoint ---------------------------------------------------------

// One rewriting step on a polynomial side; returns the replacement for the
// whole polynomial if some term fired.
std::optional<RatFunc> rewrite_poly_step(const Poly& p) {
  for (size_t ti = 0; ti < p.terms().size(); ++ti) {
    const auto& [m, coeff] = p.terms()[ti];

    // sin(u)^k, k >= 2  ->  sin(u)^(k mod 2) (1 - cos(u)^2)^(k/2)
    for (const auto& [s, e] : m.factors()) {
      if (s.kind() == Symbol::Kind::Atom && s.atom_data().kind == AtomKind::Sin && e >= 2) {
        const RatFunc& u = s.atom_data().args[0];
        RatFunc cosu = intern_cos(u);
        RatFunc repl = (RatFunc(1) - cosu * cosu).pow(e / 2);
        if (e % 2) repl = repl * rf_symbol(s);
        RatFunc rest(Poly::from_terms({{m.div_by(Monomial(s, e)), coeff}}));
        RatFunc whole = RatFunc(p) - RatFunc(Poly::from_terms({{m, coeff}})) + rest * repl;
        return whole;
      }
    }

    // pow-atom merging within the monomial
    // groups keyed by base; total exponent accumulated.
    struct Group {
      RatFunc base;
      RatFunc total;
      int members = 0;
      bool bare_fold = false;
      bool anomaly = false;  // atom power != 1 or exponent outside canonical range
    };
    std::vector<Group> groups;
    auto find_group = [&](const RatFunc& b) -> Group& {
      for (auto& g : groups)
        if (g.base == b) return g;
      groups.push_back({b, RatFunc(0), 0, false, false});
      return groups.back();
    };
    for (const auto& [s, e] : m.factors()) {
      if (s.kind() != Symbol::Kind::Atom || s.atom_data().kind != AtomKind::Pow) continue;
      const AtomData& d = s.atom_data();
      Group& g = find_group(d.args[0]);
      g.total = g.total + d.exponent * RatFunc(Rational(e));
      g.members += 1;
      if (e != 1) g.anomaly = true;
      // canonical atoms keep rational exponents inside (0,1)
      if (d.exponent.is_constant()) {
        Rational q = d.exponent.constant_value();
        if (q <= Rational(0) || q >= Rational(1)) g.anomaly = true;
      }
    }
    if (!groups.empty()) {
      bool fire = false;
      for (auto& g : groups) {
        // bare powers of a single-symbol base fold into a *symbolic* exponent;
        // rational exponents instead keep the integer part as a bare power.
        Symbol bs;
        bool symbolic = !g.total.is_constant();
        if (symbolic && g.base.is_single_symbol(bs)) {
          int k = m.degree_in(bs);
          if (k > 0) {
            g.total = g.total + RatFunc(Rational(k));
            g.bare_fold = true;
          }
        }
        if (g.members > 1 || g.anomaly || g.bare_fold) fire = true;
      }
      if (fire) {
        // rebuild the term
        Monomial rest = m;
        for (const auto& [s, e] : m.factors()) {
          if (s.kind() == Symbol::Kind::Atom && s.atom_data().kind == AtomKind::Pow) {
            for (auto& g : groups)
              if (g.base == s.atom_data().args[0]) rest = rest.div_by(Monomial(s, e));
          }
        }
        for (auto& g : groups) {
          Symbol bs;
          if (g.bare_fold && g.base.is_single_symbol(bs)) {
            int k = rest.degree_in(bs);
            if (k > 0) rest = rest.div_by(Monomial(bs, k));
          }
        }
        RatFunc repl(1);
        for (auto& g : groups) repl = repl * intern_pow(g.base, g.total);
        RatFunc rest_rf(Poly::from_terms({{rest, coeff}}));
        RatFunc whole = RatFunc(p) - RatFunc(Poly::from_terms({{m, coeff}})) + rest_rf * repl;
        return whole;
      }
    }
  }
  return std::nullopt;
}

RatFunc rewrite_fixpoint(RatFunc f) {
  for (int iter = 0; iter < 400; ++iter) {
    if (auto rn = rewrite_poly_step(f.num())) {
      f = *rn / RatFunc(f.den());
      continue;
    }
    if (auto rd = rewrite_poly_step(f.den())) {
      f = RatFunc(f.num()) / *rd;
      continue;
    }
    return f;
  }
  throw DomainError("rewrite fixpoint did not terminate");
}

}  // namespace

// --- Expr --------------------------------------------------------------------

Expr Expr::variable(int index) { return Expr(RatFunc(Symbol::variable(index)), true); }
Expr Expr::parameter(const std::string& name) {
  return Expr(RatFunc(Symbol::parameter(name)), true);
}
Expr Expr::from_raw(RatFunc f) { return Expr(rewrite_fixpoint(std::move(f)), true); }

Expr Expr::exp_of(const Expr& u) { return from_raw(intern_exp(u.f_)); }
Expr Expr::ln_of(const Expr& u) { return from_raw(intern_ln(u.f_)); }
Expr Expr::sin_of(const Expr& u) { return from_raw(intern_sin(u.f_)); }
Expr Expr::cos_of(const Expr& u) { return from_raw(intern_cos(u.f_)); }
Expr Expr::tan_of(const Expr& u) { return from_raw(intern_sin(u.f_) / intern_cos(u.f_)); }
Expr Expr::arctan_of(const Expr& u) { return from_raw(intern_arctan(u.f_)); }
Expr Expr::sqrt_of(const Expr& u) { return from_raw(intern_pow(u.f_, RatFunc(Rational(1, 2)))); }
Expr Expr::pow(const Expr& base, const Expr& exponent) {
  return from_raw(intern_pow(base.f_, exponent.f_));
}

Expr Expr::opaque(const std::string& name, const std::vector<Expr>& args, std::vector<int> deriv) {
  if (deriv.empty()) deriv.assign(args.size(), 0);
  if (deriv.size() != args.size()) throw DomainError("opaque derivative index arity mismatch");
  std::vector<RatFunc> raw;
  raw.reserve(args.size());
  for (const Expr& a : args) raw.push_back(a.f_);
  return from_raw(rf_symbol(make_atom_symbol(AtomKind::Opaque, std::move(raw), RatFunc(0), name,
                                             std::move(deriv))));
}

bool Expr::depends_on_variable(int index) const {
  std::set<Symbol> syms;
  collect_symbols(syms);
  Symbol v = Symbol::variable(index);
  for (const Symbol& s : syms) {
    if (symbol_cmp(s, v) == 0) return true;
    if (s.kind() == Symbol::Kind::Atom) {
      const AtomData& d = s.atom_data();
      for (const RatFunc& a : d.args)
        if (Expr(a, true).depends_on_variable(index)) return true;
      if (d.kind == AtomKind::Pow && Expr(d.exponent, true).depends_on_variable(index)) return true;
    }
  }
  return false;
}

bool Expr::has_variables() const {
  std::set<Symbol> syms;
  collect_symbols(syms);
  for (const Symbol& s : syms) {
    if (s.kind() == Symbol::Kind::Variable) return true;
    if (s.kind() == Symbol::Kind::Atom) return true;  // atom arguments reference variables
  }
  return false;
}

bool Expr::has_atoms() const {
  std::set<Symbol> syms;
  collect_symbols(syms);
  for (const Symbol& s : syms)
    if (s.kind() == Symbol::Kind::Atom) return true;
  return false;
}

bool Expr::parameters_only() const {
  std::set<Symbol> syms;
  collect_symbols(syms);
  for (const Symbol& s : syms)
    if (s.kind() != Symbol::Kind::Parameter) return false;
  return true;
}

// --- differentiation ----------------------------------------------------------

namespace {

RatFunc diff_ratfunc(const RatFunc& f, int var);

RatFunc diff_symbol(const Symbol& s, int var) {
  switch (s.kind()) {
    case Symbol::Kind::Variable:
      return RatFunc(s.var_index() == var ? 1 : 0);
    case Symbol::Kind::Parameter:
      return RatFunc(0);
    case Symbol::Kind::Atom: {
      const AtomData& d = s.atom_data();
      switch (d.kind) {
        case AtomKind::Exp: {
          RatFunc du = diff_ratfunc(d.args[0], var);
          return rf_symbol(s) * du;
        }
        case AtomKind::Ln:
          return diff_ratfunc(d.args[0], var) / d.args[0];
        case AtomKind::Sin:
          return intern_cos(d.args[0]) * diff_ratfunc(d.args[0], var);
        case AtomKind::Cos:
          return -intern_sin(d.args[0]) * diff_ratfunc(d.args[0], var);
        case AtomKind::ArcTan: {
          const RatFunc& u = d.args[0];
          return diff_ratfunc(u, var) / (RatFunc(1) + u * u);
        }
        case AtomKind::Pow: {
          if (Expr::from_raw(d.exponent).depends_on_variable(var))
            throw DomainError("cannot differentiate power with exponent depending on the variable");
          const RatFunc& b = d.args[0];
          RatFunc db = diff_ratfunc(b, var);
          if (db.is_zero()) return RatFunc(0);
          Symbol bs;
          if (b.is_single_symbol(bs))
            return d.exponent * intern_pow(b, d.exponent - RatFunc(1)) * db;
          return d.exponent * rf_symbol(s) * db / b;
        }
        case AtomKind::Opaque: {
          RatFunc acc(0);
          for (size_t i = 0; i < d.args.size(); ++i) {
            RatFunc da = diff_ratfunc(d.args[i], var);
            if (da.is_zero()) continue;
            std::vector<int> nd = d.deriv;
            nd[i] += 1;
            acc = acc + rf_symbol(make_atom_symbol(AtomKind::Opaque, d.args, RatFunc(0), d.name,
                                                   std::move(nd))) *
                            da;
          }
          return acc;
        }
      }
    }
  }
  return RatFunc(0);
}

RatFunc diff_poly(const Poly& p, int var) {
  RatFunc acc(0);
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m.factors()) {
      RatFunc ds = diff_symbol(s, var);
      if (ds.is_zero()) continue;
      Monomial rest = m.div_by(Monomial(s, 1));
      RatFunc t(Poly::from_terms({{rest, c * Rational(e)}}));
      acc = acc + t * ds;
    }
  }
  return acc;
}

RatFunc diff_ratfunc(const RatFunc& f, int var) {
  RatFunc dn = diff_poly(f.num(), var);
  if (f.is_poly()) return dn / RatFunc(f.den());
  RatFunc dd = diff_poly(f.den(), var);
  RatFunc den(f.den());
  return (dn * den - RatFunc(f.num()) * dd) / (den * den);
}

}  // namespace

Expr Expr::differentiate(int var) const { return from_raw(diff_ratfunc(f_, var)); }

// --- substitution --------------------------------------------------------------

namespace {

struct SubstMaps {
  const std::map<int, Expr>* vars = nullptr;
  const std::map<std::string, Expr>* params = nullptr;
};

RatFunc subst_ratfunc(const RatFunc& f, const SubstMaps& images);

RatFunc subst_symbol(const Symbol& s, const SubstMaps& images) {
  switch (s.kind()) {
    case Symbol::Kind::Variable: {
      if (!images.vars) return rf_symbol(s);
      auto it = images.vars->find(s.var_index());
      return it == images.vars->end() ? rf_symbol(s) : it->second.raw();
    }
    case Symbol::Kind::Parameter: {
      if (!images.params) return rf_symbol(s);
      auto it = images.params->find(s.param_name());
      return it == images.params->end() ? rf_symbol(s) : it->second.raw();
    }
    case Symbol::Kind::Atom: {
      const AtomData& d = s.atom_data();
      std::vector<RatFunc> args;
      args.reserve(d.args.size());
      bool changed = false;
      for (const RatFunc& a : d.args) {
        RatFunc na = subst_ratfunc(a, images);
        if (RatFunc::cmp(na, a) != 0) changed = true;
        args.push_back(std::move(na));
      }
      RatFunc expo = d.exponent;
      if (d.kind == AtomKind::Pow) {
        expo = subst_ratfunc(d.exponent, images);
        if (RatFunc::cmp(expo, d.exponent) != 0) changed = true;
      }
      if (!changed) return rf_symbol(s);
      switch (d.kind) {
        case AtomKind::Exp:
          return intern_exp(args[0]);
        case AtomKind::Ln:
          return intern_ln(args[0]);
        case AtomKind::Sin:
          return intern_sin(args[0]);
        case AtomKind::Cos:
          return intern_cos(args[0]);
        case AtomKind::ArcTan:
          return intern_arctan(args[0]);
        case AtomKind::Pow:
          return intern_pow(args[0], expo);
        case AtomKind::Opaque:
          return rf_symbol(
              make_atom_symbol(AtomKind::Opaque, std::move(args), RatFunc(0), d.name, d.deriv));
      }
    }
  }
  return rf_symbol(s);
}

RatFunc subst_poly(const Poly& p, const SubstMaps& images) {
  RatFunc acc(0);
  for (const auto& [m, c] : p.terms()) {
    RatFunc t{Rational(c)};
    for (const auto& [s, e] : m.factors()) t = t * subst_symbol(s, images).pow(e);
    acc = acc + t;
  }
  return acc;
}

RatFunc subst_ratfunc(const RatFunc& f, const SubstMaps& images) {
  RatFunc n = subst_poly(f.num(), images);
  if (f.is_poly()) return n / RatFunc(f.den());
  RatFunc d = subst_poly(f.den(), images);
  return n / d;
}

}  // namespace

Expr Expr::substitute(const std::map<int, Expr>& images) const {
  return from_raw(subst_ratfunc(f_, SubstMaps{&images, nullptr}));
}

Expr Expr::substitute_params(const std::map<std::string, Expr>& images) const {
  return from_raw(subst_ratfunc(f_, SubstMaps{nullptr, &images}));
}

// --- evaluation -----------------------------------------------------------------

const Rational* EvalPoint::find_opaque(const Symbol& s) const {
  for (const auto& [k, v] : opaques)
    if (symbol_cmp(k, s) == 0) return &v;
  return nullptr;
}

void EvalPoint::set_opaque(const Symbol& s, const Rational& v) {
  for (auto& [k, old] : opaques)
    if (symbol_cmp(k, s) == 0) {
      old = v;
      return;
    }
  opaques.push_back({s, v});
}

namespace {

NumValue nv_add(const NumValue& a, const NumValue& b) {
  if (a.exact && b.exact) return NumValue::of(a.q + b.q);
  return NumValue::of(a.as_double() + b.as_double());
}
NumValue nv_mul(const NumValue& a, const NumValue& b) {
  if (a.exact && b.exact) return NumValue::of(a.q * b.q);
  return NumValue::of(a.as_double() * b.as_double());
}
NumValue nv_div(const NumValue& a, const NumValue& b) {
  if (b.exact ? b.q.is_zero() : b.d == 0.0) throw EvalError("division by zero while evaluating");
  if (a.exact && b.exact) return NumValue::of(a.q / b.q);
  return NumValue::of(a.as_double() / b.as_double());
}

NumValue eval_ratfunc(const RatFunc& f, const EvalPoint& p);

NumValue eval_symbol(const Symbol& s, const EvalPoint& p) {
  switch (s.kind()) {
    case Symbol::Kind::Variable: {
      auto it = p.vars.find(s.var_index());
      if (it == p.vars.end()) throw EvalError("missing assignment for variable");
      return NumValue::of(it->second);
    }
    case Symbol::Kind::Parameter: {
      auto it = p.params.find(s.param_name());
      if (it == p.params.end()) throw EvalError("missing assignment for parameter " + s.param_name());
      return NumValue::of(it->second);
    }
    case Symbol::Kind::Atom: {
      const AtomData& d = s.atom_data();
      if (d.kind == AtomKind::Opaque) {
        if (const Rational* v = p.find_opaque(s)) return NumValue::of(*v);
        throw EvalError("missing assignment for opaque atom " + d.name);
      }
      NumValue u = eval_ratfunc(d.args[0], p);
      double x = u.as_double();
      bool at_zero = u.exact && u.q.is_zero();
      switch (d.kind) {
        case AtomKind::Exp:
          if (at_zero) return NumValue::of(Rational(1));
          return NumValue::of(std::exp(x));
        case AtomKind::Ln:
          if (x <= 0) throw EvalError("ln of non-positive value");
          if (u.exact && u.q.is_one()) return NumValue::of(Rational(0));
          return NumValue::of(std::log(x));
        case AtomKind::Sin:
          if (at_zero) return NumValue::of(Rational(0));
          return NumValue::of(std::sin(x));
        case AtomKind::Cos:
          if (at_zero) return NumValue::of(Rational(1));
          return NumValue::of(std::cos(x));
        case AtomKind::ArcTan:
          if (at_zero) return NumValue::of(Rational(0));
          return NumValue::of(std::atan(x));
        case AtomKind::Pow: {
          NumValue e = eval_ratfunc(d.exponent, p);
          if (x < 0) throw EvalError("fractional power of negative value");
          if (u.exact && e.exact) {
            // exact when the root extracts
            if (x == 0 && e.q.sign() <= 0) throw EvalError("0 to non-positive power");
            Rational root;
            if (e.q.den().fits_ulong_p() && u.q.exact_root(e.q.den().get_ui(), root))
              return NumValue::of(root.pow(e.q.num().get_si()));
          }
          double ee = e.as_double();
          if (x == 0 && ee <= 0) throw EvalError("0 to non-positive power");
          return NumValue::of(std::pow(x, ee));
        }
        default:
          break;
      }
    }
  }
  throw EvalError("unreachable symbol kind");
}

NumValue eval_poly(const Poly& poly, const EvalPoint& p) {
  NumValue acc = NumValue::of(Rational(0));
  for (const auto& [m, c] : poly.terms()) {
    NumValue t = NumValue::of(c);
    for (const auto& [s, e] : m.factors()) {
      NumValue v = eval_symbol(s, p);
      for (int i = 0; i < e; ++i) t = nv_mul(t, v);
    }
    acc = nv_add(acc, t);
  }
  return acc;
}

NumValue eval_ratfunc(const RatFunc& f, const EvalPoint& p) {
  NumValue n = eval_poly(f.num(), p);
  if (f.den().is_constant()) return nv_div(n, NumValue::of(f.den().constant_value()));
  return nv_div(n, eval_poly(f.den(), p));
}

}  // namespace

NumValue evaluate(const Expr& e, const EvalPoint& p) { return eval_ratfunc(e.raw(), p); }

// --- equality -------------------------------------------------------------------

uint64_t Rng::next() {
  // xorshift64*
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545f4914f6cdd1dull;
}

long Rng::integer(long lo, long hi) {
  return lo + (long)(next() % (uint64_t)(hi - lo + 1));
}

Rational Rng::rational(bool exclude_zero) {
  for (int i = 0; i < 64; ++i) {
    long num = integer(-40, 40);
    long den = integer(1, 8);
    Rational q(num, den);
    if (exclude_zero && q.is_zero()) continue;
    return q;
  }
  return Rational(1);
}

namespace {

// Collect every symbol including those inside atom arguments.
void deep_collect(const RatFunc& f, std::set<Symbol>& out) {
  std::set<Symbol> top;
  f.collect_symbols(top);
  for (const Symbol& s : top) {
    out.insert(s);
    if (s.kind() == Symbol::Kind::Atom) {
      const AtomData& d = s.atom_data();
      for (const RatFunc& a : d.args) deep_collect(a, out);
      if (d.kind == AtomKind::Pow) deep_collect(d.exponent, out);
    }
  }
}

}  // namespace

Verdict equal(const Expr& a, const Expr& b, const EqualOptions& opts) {
  if (a == b) return Verdict::Proven;
  std::set<Symbol> syms;
  deep_collect(a.raw(), syms);
  deep_collect(b.raw(), syms);
  Rng rng(opts.seed);
  int good = 0;
  int attempts = 0;
  while (good < opts.points && attempts < opts.points * 40) {
    ++attempts;
    EvalPoint p;
    for (const Symbol& s : syms) {
      switch (s.kind()) {
        case Symbol::Kind::Variable:
          p.vars[s.var_index()] = rng.rational();
          break;
        case Symbol::Kind::Parameter:
          p.params[s.param_name()] = rng.rational();
          break;
        case Symbol::Kind::Atom:
          if (s.atom_data().kind == AtomKind::Opaque) {
            bool must_be_nonzero = false;
            for (const Symbol& nz : opts.nonzero_atoms)
              if (symbol_cmp(nz, s) == 0) must_be_nonzero = true;
            p.set_opaque(s, rng.rational(must_be_nonzero));
          }
          break;
      }
    }
    try {
      NumValue va = evaluate(a, p);
      NumValue vb = evaluate(b, p);
      if (va.exact && vb.exact) {
        if (va.q != vb.q) return Verdict::Distinct;
      } else {
        double xa = va.as_double(), xb = vb.as_double();
        if (!(std::abs(xa - xb) <= opts.tol * (1.0 + std::max(std::abs(xa), std::abs(xb)))))
          return Verdict::Distinct;
      }
      ++good;
    } catch (const EvalError&) {
      continue;  // resample around domain trouble
    }
  }
  if (good < opts.points) return Verdict::Distinct;  // could not sample: treat as unproven
  return Verdict::Probable;
}

// --- printing -------------------------------------------------------------------

namespace {

std::string poly_str(const Poly& p);

std::string atom_str(const AtomData& d) {
  auto arg = [&](size_t i) { return ratfunc_str(d.args[i]); };
  switch (d.kind) {
    case AtomKind::Exp:
      return "exp(" + arg(0) + ")";
    case AtomKind::Ln:
      return "ln(" + arg(0) + ")";
    case AtomKind::Sin:
      return "sin(" + arg(0) + ")";
    case AtomKind::Cos:
      return "cos(" + arg(0) + ")";
    case AtomKind::ArcTan:
      return "arctan(" + arg(0) + ")";
    case AtomKind::Pow:
      return "(" + arg(0) + ")^(" + ratfunc_str(d.exponent) + ")";
    case AtomKind::Opaque: {
      std::string s = d.name;
      if (d.args.size() == 1) {
        for (int i = 0; i < d.deriv[0]; ++i) s += '\'';
      } else {
        for (size_t i = 0; i < d.deriv.size(); ++i)
          for (int k = 0; k < d.deriv[i]; ++k) s += "_" + std::to_string(i + 1);
      }
      s += "(";
      for (size_t i = 0; i < d.args.size(); ++i) {
        if (i) s += ",";
        s += arg(i);
      }
      s += ")";
      return s;
    }
  }
  return "?";
}

std::string monomial_str(const Monomial& m, const Rational& c) {
  std::ostringstream os;
  bool printed = false;
  Rational ac = c.abs();
  if (!ac.is_one() || m.is_unit()) {
    os << ac.str();
    printed = true;
  }
  for (const auto& [s, e] : m.factors()) {
    if (printed) os << "*";
    os << symbol_str(s);
    if (e != 1) os << "^" << e;
    printed = true;
  }
  return os.str();
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << monomial_str(m, c);
  }
  return os.str();
}

}  // namespace

std::string symbol_str(const Symbol& s) {
  switch (s.kind()) {
    case Symbol::Kind::Variable:
      return "x" + std::to_string(s.var_index());
    case Symbol::Kind::Parameter:
      return s.param_name();
    case Symbol::Kind::Atom:
      return atom_str(s.atom_data());
  }
  return "?";
}

std::string ratfunc_str(const RatFunc& f) {
  if (f.is_poly() && f.den().constant_value().is_one()) return poly_str(f.num());
  std::string n = poly_str(f.num());
  std::string d = poly_str(f.den());
  return "(" + n + ")/(" + d + ")";
}

std::string Expr::str() const { return ratfunc_str(f_); }

}  // namespace lie
