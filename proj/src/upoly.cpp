#include "lie/upoly.hpp"

#include <algorithm>

namespace lie::upoly {

int degree(const Coeffs& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void divmod(const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  int db = degree(b);
  if (db < 0) throw DomainError("polynomial division by zero");
  r = a;
  int da = degree(r);
  q.assign(std::max(da - db + 1, 0), Rational(0));
  while (da >= db) {
    Rational f = r[da] / b[db];
    q[da - db] = f;
    for (int i = 0; i <= db; ++i) r[da - db + i] -= f * b[i];
    da = degree(r);
  }
}

Rational eval(const Coeffs& p, const Rational& x) {
  Rational acc(0);
  for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

Coeffs char_poly(const Mat& m) {
  int n = m.rows();
  if (n != m.cols()) throw DomainError("char_poly of non-square matrix");
  for (int i = 0; i < n * n; ++i)
    if (!m.at(i / n, i % n).is_rational())
      throw DomainError("char_poly requires parameter-free entries");
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1; M_{k+1} = A(M_k + c_k I)
  Coeffs c(n + 1, Rational(0));
  c[n] = Rational(1);
  Mat Mk = m;
  Rational ck;
  for (int k = 1; k <= n; ++k) {
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += Mk.at(i, i).rational_value();
    ck = -(tr / Rational(k));
    c[n - k] = ck;
    if (k < n) {
      Mat shifted = Mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + Expr(ck);
      Mk = m * shifted;
    }
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class p = 2; p * p <= n && p < 100000; p = p + 1) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.push_back({p, e});
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 25)) {
      fac.push_back({n, 1});
    } else {
      // could be a square of a large prime
      mpz_class r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 2)) fac.push_back({r, 2});
      else fac.push_back({n, 1});  // give up splitting; still a valid divisor source
    }
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

}  // namespace

Roots rational_roots(const Coeffs& p0) {
  Roots out;
  Coeffs p = p0;
  int d = degree(p);
  if (d <= 0) {
    out.cofactor = p;
    return out;
  }
  // zero roots first
  int zmult = 0;
  while (degree(p) > 0 && p[0].is_zero()) {
    p.erase(p.begin());
    ++zmult;
  }
  if (zmult > 0) out.roots.push_back({Rational(0), zmult});
  d = degree(p);
  if (d <= 0) {
    out.cofactor = p;
    return out;
  }
  // clear denominators
  mpz_class lcm = 1;
  for (const Rational& c : p) {
    mpz_class den = c.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> ip;
  for (const Rational& c : p) ip.push_back(mpz_class(c.num() * (lcm / c.den())));
  std::vector<mpz_class> nums = divisors_of(ip[0]);
  std::vector<mpz_class> dens = divisors_of(ip[d]);
  std::vector<Rational> candidates;
  for (const mpz_class& u : nums)
    for (const mpz_class& v : dens) {
      mpq_class q(u, v);
      q.canonicalize();
      candidates.push_back(Rational(q));
      candidates.push_back(Rational(mpq_class(-q)));
    }
  for (const Rational& r : candidates) {
    int mult = 0;
    while (degree(p) > 0 && eval(p, r).is_zero()) {
      Coeffs q, rem;
      Coeffs lin{-r, Rational(1)};
      divmod(p, lin, q, rem);
      p = q;
      ++mult;
    }
    if (mult > 0) out.roots.push_back({r, mult});
    if (degree(p) <= 0) break;
  }
  out.cofactor = p;
  return out;
}

Mat eval_at(const Mat& m, const Coeffs& p) {
  int n = m.rows();
  Mat acc(n, n);
  Mat power = Mat::identity(n);
  for (size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) acc = acc + power.scale(Expr(p[i]));
    if (i + 1 < p.size()) power = power * m;
  }
  return acc;
}

bool complex_pair(const Coeffs& quad, Rational& beta, Rational& gamma) {
  if (degree(quad) != 2) return false;
  Rational a = quad[2], b = quad[1], c = quad[0];
  // normalize monic
  Rational p = b / a, q = c / a;
  beta = -(p / Rational(2));
  Rational g2 = q - beta * beta;
  if (g2.sign() <= 0) return false;  // not a complex pair
  Rational g;
  if (!g2.exact_root(2, g)) return false;
  gamma = g;
  return true;
}

}  // namespace lie::upoly
