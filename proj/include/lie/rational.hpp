#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lie {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number with arbitrary-precision numerator/denominator.
/// Always normalized: denominator > 0, gcd(num, den) = 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Parses "123", "-4/7". Throws on malformed input or zero denominator.
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Integer part toward -infinity and the fractional remainder in [0,1).
  Rational floor() const;
  Rational frac() const { return *this - floor(); }
  // Valid only when is_integer() and the value fits in a long.
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  Rational inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(long e) const;

  // q^(1/k) when it is exactly rational; k >= 1. Returns false otherwise.
  bool exact_root(unsigned long k, Rational& out) const;

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); used for extracting polynomial content.
  static Rational content_gcd(const Rational& a, const Rational& b);

  double to_double() const { return v_.get_d(); }
  std::string str() const;

 private:
  mpq_class v_;
};

inline Rational operator*(long n, const Rational& q) { return Rational(n) * q; }

}  // namespace lie
