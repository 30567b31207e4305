#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lie/ratfunc.hpp"

namespace lie {

enum class AtomKind : uint8_t { Exp, Ln, Sin, Cos, ArcTan, Pow, Opaque };

// Payload of an Atom symbol. Atoms are compared structurally; their
// arguments are canonical rational functions over the same symbol universe.
struct AtomData {
  AtomKind kind;
  std::string name;            // Opaque function name
  std::vector<RatFunc> args;   // Exp/Ln/Sin/Cos/ArcTan: {argument}; Pow: {base}; Opaque: arguments
  RatFunc exponent;            // Pow only
  std::vector<int> deriv;      // Opaque only: per-slot derivative orders
};

int atom_cmp(const AtomData& a, const AtomData& b);

struct EvalError : DomainError {
  using DomainError::DomainError;
};

// Exact-or-float evaluation result.
struct NumValue {
  bool exact = true;
  Rational q;
  double d = 0.0;
  double as_double() const { return exact ? q.to_double() : d; }
  static NumValue of(const Rational& r) { return {true, r, 0.0}; }
  static NumValue of(double x) { return {false, Rational(0), x}; }
};

struct EvalPoint {
  std::map<int, Rational> vars;
  std::map<std::string, Rational> params;
  // Values for opaque atoms (phi(x3), phi'(x3), ...), keyed structurally.
  std::vector<std::pair<Symbol, Rational>> opaques;
  const Rational* find_opaque(const Symbol& s) const;
  void set_opaque(const Symbol& s, const Rational& v);
};

enum class Verdict { Proven, Probable, Distinct };

struct EqualOptions {
  uint64_t seed = 20030517;
  int points = 8;
  double tol = 1e-9;
  // opaque atoms that must not be sampled as zero (corpus constraints)
  std::vector<Symbol> nonzero_atoms;
};

/// Symbolic scalar expression in canonical form: a multivariate rational
/// function over Q in the chart variables, family parameters and
/// transcendental/opaque atoms, with atom arguments recursively canonical.
class Expr {
 public:
  Expr() : f_() {}
  Expr(long n) : f_(n) {}
  explicit Expr(const Rational& c) : f_(c) {}

  static Expr variable(int index);
  static Expr parameter(const std::string& name);
  static Expr from_raw(RatFunc f);  // applies the rewrite fixpoint
  const RatFunc& raw() const { return f_; }

  bool is_zero() const { return f_.is_zero(); }
  bool is_one() const { return f_.is_one(); }
  bool is_rational() const { return f_.is_constant(); }
  Rational rational_value() const { return f_.constant_value(); }

  Expr operator-() const { return from_raw(-f_); }
  Expr operator+(const Expr& o) const { return from_raw(f_ + o.f_); }
  Expr operator-(const Expr& o) const { return from_raw(f_ - o.f_); }
  Expr operator*(const Expr& o) const { return from_raw(f_ * o.f_); }
  Expr operator/(const Expr& o) const { return from_raw(f_ / o.f_); }
  Expr inv() const { return from_raw(f_.inv()); }
  Expr pow_int(long e) const { return from_raw(f_.pow(e)); }

  bool operator==(const Expr& o) const { return f_ == o.f_; }
  bool operator!=(const Expr& o) const { return f_ != o.f_; }
  static int cmp(const Expr& a, const Expr& b) { return RatFunc::cmp(a.f_, b.f_); }

  // Atom builders (interning rules: exp additivity, odd/even trig symmetry,
  // tan -> sin/cos, sqrt -> power 1/2, rational folding).
  static Expr exp_of(const Expr& u);
  static Expr ln_of(const Expr& u);
  static Expr sin_of(const Expr& u);
  static Expr cos_of(const Expr& u);
  static Expr tan_of(const Expr& u);
  static Expr arctan_of(const Expr& u);
  static Expr sqrt_of(const Expr& u);
  static Expr pow(const Expr& base, const Expr& exponent);
  static Expr opaque(const std::string& name, const std::vector<Expr>& args,
                     std::vector<int> deriv = {});

  void collect_symbols(std::set<Symbol>& out) const { f_.collect_symbols(out); }
  bool depends_on_variable(int index) const;
  bool has_variables() const;
  bool has_atoms() const;
  bool parameters_only() const;  // no variables, no atoms

  Expr differentiate(int var) const;
  Expr substitute(const std::map<int, Expr>& images) const;
  Expr substitute_params(const std::map<std::string, Expr>& images) const;

  std::string str() const;

 private:
  explicit Expr(RatFunc f, bool /*already_canonical*/) : f_(std::move(f)) {}
  RatFunc f_;
};

NumValue evaluate(const Expr& e, const EvalPoint& p);
Verdict equal(const Expr& a, const Expr& b, const EqualOptions& opts = {});

// --- parsing ----------------------------------------------------------------

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at) : std::runtime_error(msg), pos(at) {}
};

struct ParseContext {
  std::set<std::string> params;
  std::map<std::string, int> opaques;  // name -> arity
};

Expr parse_expr(const std::string& text, const ParseContext& ctx = {});

std::string symbol_str(const Symbol& s);
std::string ratfunc_str(const RatFunc& f);

// --- sampling helpers (shared by numeric fallbacks and property tests) ------

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  // uniform integer in [lo, hi]
  long integer(long lo, long hi);
  // small-height rational in [-5, 5]; nonzero when exclude_zero
  Rational rational(bool exclude_zero = false);

 private:
  uint64_t state_;
};

}  // namespace lie
