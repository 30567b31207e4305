#pragma once

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lie/rational.hpp"
#include "lie/symbol.hpp"

namespace lie {

// Power product with sorted factors (ascending symbol order), exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Symbol& s, int e = 1);

  const std::vector<std::pair<Symbol, int>>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }
  int total_degree() const;
  int degree_in(const Symbol& s) const;

  Monomial mul(const Monomial& o) const;
  bool divides(const Monomial& o) const;         // this | o
  Monomial div_by(const Monomial& o) const;      // this / o  (must divide)
  Monomial without(const Symbol& s) const;       // drop all powers of s

  static int cmp(const Monomial& a, const Monomial& b);  // graded, then lex from top symbol

 private:
  std::vector<std::pair<Symbol, int>> f_;
  friend class Poly;
};

// Sparse multivariate polynomial over Rational; terms sorted descending.
class Poly {
 public:
  Poly() = default;
  Poly(long n) { if (n != 0) terms_.push_back({Monomial{}, Rational(n)}); }
  explicit Poly(const Rational& c) { if (!c.is_zero()) terms_.push_back({Monomial{}, c}); }
  explicit Poly(const Symbol& s) { terms_.push_back({Monomial(s), Rational(1)}); }
  static Poly from_terms(std::vector<std::pair<Monomial, Rational>> t);

  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }
  Rational constant_value() const;
  bool is_single_symbol(Symbol& out) const;  // exactly 1*s^1

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_scalar(const Rational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return cmp(*this, o) == 0; }
  static int cmp(const Poly& a, const Poly& b);

  void collect_symbols(std::set<Symbol>& out) const;
  bool contains_symbol(const Symbol& s) const;
  int degree_in(const Symbol& s) const;
  int total_degree() const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  // Rational content (gcd of coefficients, positive) and the sign of the
  // leading coefficient; primitive() = *this / (sign * content).
  Rational content() const;
  Poly primitive() const;

  // Coefficients as a dense univariate polynomial in s (index = power of s).
  std::vector<Poly> coeffs_in(const Symbol& s) const;
  static Poly assemble_in(const Symbol& s, const std::vector<Poly>& cs);

  // Exact multivariate division; nullopt if not divisible.
  static std::optional<Poly> divexact(const Poly& a, const Poly& b);
  // Primitive positive gcd (PRS on the top symbol, recursing on contents).
  static Poly gcd(const Poly& a, const Poly& b);

  // Formal partial derivative treating every symbol as independent.
  Poly formal_derivative(const Symbol& s) const;

  // Rebuild the polynomial mapping each symbol through `image`; the result is
  // accumulated with the caller-provided ring operations (used by Expr for
  // substitution into a richer ring).
  template <typename T>
  T map_symbols(const std::function<T(const Symbol&)>& image, const T& zero, const T& one,
                const std::function<T(const Rational&)>& constant,
                const std::function<T(const T&, const T&)>& add,
                const std::function<T(const T&, const T&)>& mul) const {
    T acc = zero;
    for (const auto& [m, c] : terms_) {
      T t = constant(c);
      for (const auto& [s, e] : m.factors()) {
        T im = image(s);
        for (int i = 0; i < e; ++i) t = mul(t, im);
      }
      acc = add(acc, t);
    }
    return acc;
  }

 private:
  std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace lie
