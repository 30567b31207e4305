#include "lie/ratfunc.hpp"

namespace lie {

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      auto qn = Poly::divexact(num_, g);
      auto qd = Poly::divexact(den_, g);
      if (!qn || !qd) throw DomainError("gcd reduction failed");
      num_ = *qn;
      den_ = *qd;
    }
  }
  // scale: den primitive, positive leading coefficient
  Rational s = den_.content();
  if (den_.leading_coeff().sign() < 0) s = -s;
  if (!s.is_one()) {
    Rational si = s.inv();
    den_ = den_.mul_scalar(si);
    num_ = num_.mul_scalar(si);
  }
}

bool RatFunc::is_one() const {
  return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
         num_.constant_value() == den_.constant_value();
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("not a constant");
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (Poly::cmp(den_, o.den_) == 0) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(1);
  bool invert = e < 0;
  unsigned k = invert ? (unsigned)(-e) : (unsigned)e;
  RatFunc r(num_.pow(k), den_.pow(k));
  return invert ? r.inv() : r;
}

int RatFunc::cmp(const RatFunc& a, const RatFunc& b) {
  int c = Poly::cmp(a.num_, b.num_);
  if (c != 0) return c;
  return Poly::cmp(a.den_, b.den_);
}

void RatFunc::collect_symbols(std::set<Symbol>& out) const {
  num_.collect_symbols(out);
  den_.collect_symbols(out);
}

bool RatFunc::contains_symbol(const Symbol& s) const {
  return num_.contains_symbol(s) || den_.contains_symbol(s);
}

void RatFunc::primitive_decompose(Rational& c, RatFunc& w) const {
  if (is_zero()) {
    c = Rational(0);
    w = RatFunc(0);
    return;
  }
  Rational s = num_.content();
  if (num_.leading_coeff().sign() < 0) s = -s;
  c = s;
  w = RatFunc(num_.mul_scalar(s.inv()), den_);
}

}  // namespace lie
