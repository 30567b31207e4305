#pragma once

#include "lie/poly.hpp"

namespace lie {

// Quotient num/den of multivariate polynomials, kept fully reduced.
// Canonical form: den != 0, gcd(num, den) trivial, den primitive with
// positive leading coefficient (rational scale absorbed into num).
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long n) : num_(n), den_(1) {}
  explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
  explicit RatFunc(const Symbol& s) : num_(s), den_(1) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly n, Poly d);  // normalizes

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_poly() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  bool is_integer_constant() const { return is_constant() && constant_value().is_integer(); }
  bool is_single_symbol(Symbol& out) const { return is_poly() && den_.constant_value().is_one() && num_.is_single_symbol(out); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(long e) const;

  bool operator==(const RatFunc& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const RatFunc& o) const { return cmp(*this, o) != 0; }
  static int cmp(const RatFunc& a, const RatFunc& b);

  void collect_symbols(std::set<Symbol>& out) const;
  bool contains_symbol(const Symbol& s) const;

  // Writes *this = c * w with w "direction-canonical": numerator primitive
  // with positive leading coefficient, denominator canonical. Used when
  // interning atom arguments (exp, sin, ... odd/even symmetries).
  void primitive_decompose(Rational& c, RatFunc& w) const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace lie
