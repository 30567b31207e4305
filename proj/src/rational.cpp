#include "lie/rational.hpp"

namespace lie {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal: " + s);
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError("to_long on non-integer rational");
  if (!v_.get_num().fits_slong_p()) throw DomainError("rational too large for long");
  return v_.get_num().get_si();
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? -(unsigned long)e : (unsigned long)e;
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r(n, d);
  r.canonicalize();
  Rational out{r};
  return invert ? out.inv() : out;
}

bool Rational::exact_root(unsigned long k, Rational& out) const {
  if (k == 0) throw DomainError("0-th root");
  if (k == 1) { out = *this; return true; }
  if (sign() < 0) return false;  // even roots handled by caller; odd kept simple
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  int exact_d = mpz_root(rd.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  if (!exact_n || !exact_d) return false;
  mpq_class r(rn, rd);
  r.canonicalize();
  out = Rational(r);
  return true;
}

Rational Rational::content_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  mpq_class r(g, l);
  r.canonicalize();
  return Rational(r);
}

std::string Rational::str() const { return v_.get_str(); }

}  // namespace lie
