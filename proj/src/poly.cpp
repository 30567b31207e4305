#include "lie/poly.hpp"

#include <algorithm>
#include <map>

namespace lie {

Monomial::Monomial(const Symbol& s, int e) {
  if (e != 0) f_.push_back({s, e});
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [s, e] : f_) d += e;
  return d;
}

int Monomial::degree_in(const Symbol& s) const {
  for (auto& [t, e] : f_)
    if (symbol_cmp(t, s) == 0) return e;
  return 0;
}

Monomial Monomial::mul(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    int c = symbol_cmp(f_[i].first, o.f_[j].first);
    if (c < 0) r.f_.push_back(f_[i++]);
    else if (c > 0) r.f_.push_back(o.f_[j++]);
    else {
      r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i; ++j;
    }
  }
  while (i < f_.size()) r.f_.push_back(f_[i++]);
  while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  size_t j = 0;
  for (auto& [s, e] : f_) {
    while (j < o.f_.size() && symbol_cmp(o.f_[j].first, s) < 0) ++j;
    if (j >= o.f_.size() || symbol_cmp(o.f_[j].first, s) != 0 || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::div_by(const Monomial& o) const {
  Monomial r;
  size_t j = 0;
  for (auto& [s, e] : f_) {
    int sub = 0;
    while (j < o.f_.size() && symbol_cmp(o.f_[j].first, s) < 0) ++j;
    if (j < o.f_.size() && symbol_cmp(o.f_[j].first, s) == 0) sub = o.f_[j].second;
    if (e - sub > 0) r.f_.push_back({s, e - sub});
  }
  return r;
}

Monomial Monomial::without(const Symbol& s) const {
  Monomial r;
  for (auto& [t, e] : f_)
    if (symbol_cmp(t, s) != 0) r.f_.push_back({t, e});
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // lex from the largest symbol downward
  auto ia = a.f_.rbegin();
  auto ib = b.f_.rbegin();
  while (ia != a.f_.rend() && ib != b.f_.rend()) {
    int c = symbol_cmp(ia->first, ib->first);
    if (c != 0) return c;  // larger top symbol wins
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia; ++ib;
  }
  if (ia != a.f_.rend()) return 1;
  if (ib != b.f_.rend()) return -1;
  return 0;
}

namespace {
struct MonLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};
}  // namespace

Poly Poly::from_terms(std::vector<std::pair<Monomial, Rational>> t) {
  std::map<Monomial, Rational, MonLess> acc;
  for (auto& [m, c] : t) {
    if (c.is_zero()) continue;
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  Poly p;
  p.terms_.assign(acc.begin(), acc.end());
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].second;
}

bool Poly::is_single_symbol(Symbol& out) const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = terms_[0];
  if (!c.is_one() || m.factors().size() != 1 || m.factors()[0].second != 1) return false;
  out = m.factors()[0].first;
  return true;
}

Poly Poly::operator-() const {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (auto& [m, c] : terms_) r.terms_.push_back({m, -c});
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) r.terms_.push_back(terms_[i++]);
    else if (c < 0) r.terms_.push_back(o.terms_[j++]);
    else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
      ++i; ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  std::map<Monomial, Rational, MonLess> acc;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      Monomial m = m1.mul(m2);
      Rational c = c1 * c2;
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  Poly r;
  r.terms_.assign(acc.begin(), acc.end());
  return r;
}

Poly Poly::mul_scalar(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (auto& [m, k] : terms_) r.terms_.push_back({m, k * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = Monomial::cmp(a.terms_[i].first, b.terms_[i].first);
    if (c != 0) return c;
    if (a.terms_[i].second != b.terms_[i].second)
      return a.terms_[i].second < b.terms_[i].second ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

void Poly::collect_symbols(std::set<Symbol>& out) const {
  for (auto& [m, c] : terms_)
    for (auto& [s, e] : m.factors()) out.insert(s);
}

bool Poly::contains_symbol(const Symbol& s) const {
  for (auto& [m, c] : terms_)
    if (m.degree_in(s) > 0) return true;
  return false;
}

int Poly::degree_in(const Symbol& s) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

const Monomial& Poly::leading_monomial() const { return terms_.front().first; }
const Rational& Poly::leading_coeff() const { return terms_.front().second; }

Rational Poly::content() const {
  Rational g(0);
  for (auto& [m, c] : terms_) g = Rational::content_gcd(g, c);
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Rational g = content();
  if (leading_coeff().sign() < 0) g = -g;
  return mul_scalar(g.inv());
}

std::vector<Poly> Poly::coeffs_in(const Symbol& s) const {
  int d = degree_in(s);
  std::vector<Poly> cs(d + 1);
  std::vector<std::vector<std::pair<Monomial, Rational>>> buckets(d + 1);
  for (auto& [m, c] : terms_) buckets[m.degree_in(s)].push_back({m.without(s), c});
  for (int i = 0; i <= d; ++i) cs[i] = Poly::from_terms(std::move(buckets[i]));
  return cs;
}

Poly Poly::assemble_in(const Symbol& s, const std::vector<Poly>& cs) {
  Poly r;
  Poly xs{s};
  for (int i = (int)cs.size() - 1; i >= 0; --i) r = r * xs + cs[i];
  return r;
}

std::optional<Poly> Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly r = a, q;
  while (!r.is_zero()) {
    if (!b.leading_monomial().divides(r.leading_monomial())) return std::nullopt;
    Monomial m = r.leading_monomial().div_by(b.leading_monomial());
    Rational c = r.leading_coeff() / b.leading_coeff();
    Poly t = Poly::from_terms({{m, c}});
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

// Pseudo-remainder of dense univariate polynomials with Poly coefficients.
std::vector<Poly> prem(std::vector<Poly> u, const std::vector<Poly>& v) {
  auto deg = [](const std::vector<Poly>& p) -> int {
    for (int i = (int)p.size() - 1; i >= 0; --i)
      if (!p[i].is_zero()) return i;
    return -1;
  };
  int dv = deg(v);
  const Poly& lv = v[dv];
  int du = deg(u);
  while (du >= dv) {
    Poly lu = u[du];
    for (int i = 0; i <= du; ++i) u[i] = u[i] * lv;
    for (int i = 0; i <= dv; ++i) u[du - dv + i] = u[du - dv + i] - lu * v[i];
    int nd = deg(u);
    u.resize(std::max(nd + 1, 0));
    du = nd;
  }
  return u;
}

Poly content_in(const Poly& p, const Symbol& s) {
  Poly g;
  for (const Poly& c : p.coeffs_in(s))
    if (!c.is_zero()) g = Poly::gcd(g, c);
  return g;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  std::set<Symbol> syms;
  a.collect_symbols(syms);
  b.collect_symbols(syms);
  Symbol top = *syms.rbegin();
  if (a.degree_in(top) == 0 || b.degree_in(top) == 0) {
    // top symbol missing from one side: gcd divides its coefficients
    const Poly& flat = a.degree_in(top) == 0 ? a : b;
    const Poly& other = a.degree_in(top) == 0 ? b : a;
    return gcd(flat, content_in(other, top));
  }
  Poly ca = content_in(a, top);
  Poly cb = content_in(b, top);
  Poly cg = gcd(ca, cb);
  auto pa = divexact(a, ca);
  auto pb = divexact(b, cb);
  if (!pa || !pb) throw DomainError("content division failed");
  std::vector<Poly> u = pa->coeffs_in(top);
  std::vector<Poly> v = pb->coeffs_in(top);
  if (u.size() < v.size()) std::swap(u, v);
  while (true) {
    std::vector<Poly> r = prem(u, v);
    bool zero = true;
    for (auto& p : r)
      if (!p.is_zero()) { zero = false; break; }
    if (zero) break;
    Poly rp = Poly::assemble_in(top, r);
    Poly cr = content_in(rp, top);
    auto rr = divexact(rp, cr);
    u = v;
    v = rr->coeffs_in(top);
  }
  Poly g = Poly::assemble_in(top, v);
  return (cg * g).primitive();
}

Poly Poly::formal_derivative(const Symbol& s) const {
  std::vector<std::pair<Monomial, Rational>> out;
  for (auto& [m, c] : terms_) {
    int e = m.degree_in(s);
    if (e == 0) continue;
    Monomial reduced = m.div_by(Monomial(s, 1));
    out.push_back({reduced, c * Rational(e)});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace lie
