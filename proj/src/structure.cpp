#include "lie/structure.hpp"

#include <algorithm>
#include <sstream>

namespace lie {

StructureConstants::StructureConstants(int dim, std::vector<std::string> params)
    : m_(dim), c_(dim * dim * dim), params_(std::move(params)) {
  if (dim <= 0 || dim > 8) throw DomainError("algebra dimension out of range");
}

void StructureConstants::set(int k, int i, int j, const Expr& v) {
  c_[(k * m_ + i) * m_ + j] = v;
  c_[(k * m_ + j) * m_ + i] = -v;
}

StructureConstants StructureConstants::from_brackets(int dim,
                                                     const std::vector<BracketEntry>& entries,
                                                     std::vector<std::string> params) {
  StructureConstants A(dim, std::move(params));
  for (const BracketEntry& e : entries) {
    if (e.i < 0 || e.j < 0 || e.i >= dim || e.j >= dim) throw DomainError("bracket index out of range");
    if (e.i >= e.j) throw DomainError("bracket entries must have i < j");
    for (const auto& [k, v] : e.coeffs) {
      if (k < 0 || k >= dim) throw DomainError("bracket coefficient index out of range");
      A.set(k, e.i, e.j, A.c(k, e.i, e.j) + v);
    }
  }
  return A;
}

bool StructureConstants::parameter_free() const {
  for (const Expr& e : c_)
    if (!e.is_rational()) return false;
  return true;
}

std::vector<Expr> StructureConstants::bracket(const std::vector<Expr>& u,
                                              const std::vector<Expr>& v) const {
  if ((int)u.size() != m_ || (int)v.size() != m_) throw DomainError("element dimension mismatch");
  std::vector<Expr> w(m_);
  for (int i = 0; i < m_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < m_; ++j) {
      if (v[j].is_zero()) continue;
      Expr uv = u[i] * v[j];
      for (int k = 0; k < m_; ++k) {
        const Expr& ck = c(k, i, j);
        if (!ck.is_zero()) w[k] = w[k] + ck * uv;
      }
    }
  }
  return w;
}

std::vector<JacobiViolation> StructureConstants::jacobi_violations() const {
  std::vector<JacobiViolation> out;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      for (int k = j + 1; k < m_; ++k)
        for (int r = 0; r < m_; ++r) {
          Expr acc(0);
          for (int l = 0; l < m_; ++l) {
            acc = acc + c(l, i, j) * c(r, l, k);
            acc = acc + c(l, j, k) * c(r, l, i);
            acc = acc + c(l, k, i) * c(r, l, j);
          }
          if (!acc.is_zero()) out.push_back({i, j, k, r, acc});
        }
  return out;
}

StructureConstants StructureConstants::change_basis(const Mat& P) const {
  if (P.rows() != m_ || P.cols() != m_) throw DomainError("basis change shape mismatch");
  Mat Pinv = P.inverse();  // throws if singular
  StructureConstants B(m_, params_);
  // [e~_i, e~_j] = sum_{k,l} P_ki P_lj [e_k, e_l] = sum_m (...) e_m; convert to e~ via P^-1
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) {
      std::vector<Expr> w(m_);
      for (int k = 0; k < m_; ++k) {
        if (P.at(k, i).is_zero()) continue;
        for (int l = 0; l < m_; ++l) {
          if (P.at(l, j).is_zero()) continue;
          Expr f = P.at(k, i) * P.at(l, j);
          for (int mm = 0; mm < m_; ++mm) {
            const Expr& ck = c(mm, k, l);
            if (!ck.is_zero()) w[mm] = w[mm] + ck * f;
          }
        }
      }
      std::vector<Expr> nw = Pinv.apply(w);
      for (int r = 0; r < m_; ++r) B.set(r, i, j, nw[r]);
    }
  return B;
}

Mat StructureConstants::ad_matrix(int mu) const {
  // column nu holds [e_nu, e_mu]
  Mat m(m_, m_);
  for (int nu = 0; nu < m_; ++nu)
    for (int k = 0; k < m_; ++k) m.at(k, nu) = c(k, nu, mu);
  return m;
}

Mat StructureConstants::ad_of(const std::vector<Expr>& u) const {
  Mat m(m_, m_);
  for (int mu = 0; mu < m_; ++mu) {
    if (u[mu].is_zero()) continue;
    Mat a = ad_matrix(mu);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) m.at(i, j) = m.at(i, j) + u[mu] * a.at(i, j);
  }
  return m;
}

StructureConstants StructureConstants::direct_sum(const StructureConstants& a,
                                                  const StructureConstants& b) {
  std::vector<std::string> params = a.params_;
  for (const std::string& p : b.params_)
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  StructureConstants s(a.m_ + b.m_, params);
  for (int k = 0; k < a.m_; ++k)
    for (int i = 0; i < a.m_; ++i)
      for (int j = i + 1; j < a.m_; ++j) s.set(k, i, j, a.c(k, i, j));
  for (int k = 0; k < b.m_; ++k)
    for (int i = 0; i < b.m_; ++i)
      for (int j = i + 1; j < b.m_; ++j)
        s.set(a.m_ + k, a.m_ + i, a.m_ + j, b.c(k, i, j));
  return s;
}

StructureConstants StructureConstants::instantiate(
    const std::map<std::string, Rational>& values) const {
  std::map<std::string, Expr> images;
  std::vector<std::string> remaining;
  for (const std::string& p : params_) {
    auto it = values.find(p);
    if (it != values.end()) images.emplace(p, Expr(it->second));
    else remaining.push_back(p);
  }
  StructureConstants B(m_, remaining);
  for (int k = 0; k < m_; ++k)
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j) B.set(k, i, j, c(k, i, j).substitute_params(images));
  return B;
}

bool StructureConstants::operator==(const StructureConstants& o) const {
  if (m_ != o.m_) return false;
  for (size_t t = 0; t < c_.size(); ++t)
    if (c_[t] != o.c_[t]) return false;
  return true;
}

std::string StructureConstants::str() const {
  std::ostringstream os;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) {
      bool any = false;
      std::ostringstream line;
      for (int k = 0; k < m_; ++k) {
        if (c(k, i, j).is_zero()) continue;
        if (any) line << " + ";
        line << "(" << c(k, i, j).str() << ")*e" << (k + 1);
        any = true;
      }
      if (any) os << "[e" << (i + 1) << ",e" << (j + 1) << "] = " << line.str() << "\n";
    }
  return os.str();
}

// --- subspace machinery --------------------------------------------------------

Subspace bracket_subspaces(const StructureConstants& A, const Subspace& s1, const Subspace& s2) {
  if (s1.ambient() != A.dim() || s2.ambient() != A.dim())
    throw DomainError("bracket_subspaces: ambient mismatch");
  std::vector<std::vector<Expr>> rows;
  for (int i = 0; i < s1.dim(); ++i)
    for (int j = 0; j < s2.dim(); ++j)
      rows.push_back(A.bracket(s1.basis_vector(i), s2.basis_vector(j)));
  if (rows.empty()) return Subspace(A.dim());
  return Subspace::span(A.dim(), Mat::from_rows(rows));
}

namespace {

std::vector<Subspace> series(const StructureConstants& A, bool lower_central) {
  std::vector<Subspace> out;
  out.push_back(Subspace::full(A.dim()));
  for (int step = 0; step <= A.dim() + 1; ++step) {
    const Subspace& prev = out.back();
    Subspace next = lower_central ? bracket_subspaces(A, out.front(), prev)
                                  : bracket_subspaces(A, prev, prev);
    bool stable = next == prev;
    out.push_back(next);  // a repeated member witnesses stabilization
    if (stable || next.dim() == 0) return out;
  }
  throw DomainError("series did not stabilize within dimension bound");
}

}  // namespace

std::vector<Subspace> derived_series(const StructureConstants& A) { return series(A, false); }
std::vector<Subspace> lower_central_series(const StructureConstants& A) { return series(A, true); }

namespace {

// {x : [x, e_j] in I for all j}
Subspace center_preimage(const StructureConstants& A, const Subspace& ideal) {
  int m = A.dim();
  // residual of reducing [x, e_j] by I is linear in x; build stacked system
  // rows: for each j, the map x -> [x, e_j] followed by reduction mod I.
  // We materialize it column by column on basis vectors.
  std::vector<std::vector<Expr>> cols(m);  // per basis vector: stacked residuals
  int stacked = 0;
  for (int b = 0; b < m; ++b) {
    std::vector<Expr> col;
    for (int j = 0; j < m; ++j) {
      std::vector<Expr> ebas(m);
      ebas[b] = Expr(1);
      std::vector<Expr> w = A.bracket(ebas, [&] {
        std::vector<Expr> ej(m);
        ej[j] = Expr(1);
        return ej;
      }());
      // reduce w modulo ideal basis
      for (int i = 0; i < ideal.dim(); ++i) {
        int pc = -1;
        for (int t = 0; t < m; ++t)
          if (!ideal.basis().at(i, t).is_zero()) {
            pc = t;
            break;
          }
        if (pc < 0 || w[pc].is_zero()) continue;
        Expr f = w[pc];
        for (int t = 0; t < m; ++t) w[t] = w[t] - f * ideal.basis().at(i, t);
      }
      for (int t = 0; t < m; ++t) col.push_back(w[t]);
    }
    cols[b] = std::move(col);
    stacked = (int)cols[b].size();
  }
  Mat sys(stacked, m);
  for (int b = 0; b < m; ++b)
    for (int r = 0; r < stacked; ++r) sys.at(r, b) = cols[b][r];
  Mat ker = sys.null_space();
  return Subspace::span(m, ker);
}

}  // namespace

std::vector<Subspace> upper_central_series(const StructureConstants& A) {
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(A.dim()));
  for (int step = 0; step <= A.dim() + 1; ++step) {
    Subspace next = center_preimage(A, out.back());
    bool stable = next == out.back();
    out.push_back(next);
    if (stable || next.dim() == A.dim()) return out;
  }
  throw DomainError("upper central series did not stabilize");
}

Subspace center(const StructureConstants& A) {
  return center_preimage(A, Subspace::zero(A.dim()));
}

bool is_subalgebra(const StructureConstants& A, const Subspace& s) {
  Subspace br = bracket_subspaces(A, s, s);
  return s.contains(br);
}

bool is_ideal(const StructureConstants& A, const Subspace& s) {
  Subspace br = bracket_subspaces(A, Subspace::full(A.dim()), s);
  return s.contains(br);
}

bool is_solvable(const StructureConstants& A) { return derived_series(A).back().dim() == 0; }
bool is_nilpotent(const StructureConstants& A) {
  return lower_central_series(A).back().dim() == 0;
}

bool is_solvable_subspace(const StructureConstants& A, const Subspace& s) {
  Subspace cur = s;
  for (int i = 0; i <= A.dim() + 1; ++i) {
    if (cur.dim() == 0) return true;
    Subspace next = bracket_subspaces(A, cur, cur);
    if (next == cur) return false;
    cur = next;
  }
  return false;
}

bool is_nilpotent_subspace(const StructureConstants& A, const Subspace& s) {
  Subspace cur = s;
  for (int i = 0; i <= A.dim() + 1; ++i) {
    if (cur.dim() == 0) return true;
    Subspace next = bracket_subspaces(A, s, cur);
    if (next == cur) return false;
    cur = next;
  }
  return false;
}

Mat killing_form(const StructureConstants& A) {
  int m = A.dim();
  std::vector<Mat> ads;
  ads.reserve(m);
  for (int i = 0; i < m; ++i) ads.push_back(A.ad_matrix(i));
  Mat K(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Mat prod = ads[i] * ads[j];
      Expr tr(0);
      for (int t = 0; t < m; ++t) tr = tr + prod.at(t, t);
      K.at(i, j) = tr;
      K.at(j, i) = tr;
    }
  return K;
}

Signature killing_signature(const StructureConstants& A) {
  if (!A.parameter_free())
    throw DomainError("killing_signature requires instantiated (parameter-free) constants");
  Mat K = killing_form(A);
  int m = A.dim();
  // symmetric congruence diagonalization over Q
  Signature sig;
  Mat M = K;
  std::vector<bool> done(m, false);
  for (int step = 0; step < m; ++step) {
    int p = -1;
    for (int i = 0; i < m; ++i)
      if (!done[i] && !M.at(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) {
      // try to create a nonzero diagonal via row/col combination
      int a = -1, b = -1;
      for (int i = 0; i < m && a < 0; ++i)
        if (!done[i])
          for (int j = i + 1; j < m; ++j)
            if (!done[j] && !M.at(i, j).is_zero()) {
              a = i;
              b = j;
              break;
            }
      if (a < 0) break;  // remaining block is zero
      // row/col a += row/col b
      for (int j = 0; j < m; ++j) M.at(a, j) = M.at(a, j) + M.at(b, j);
      for (int i = 0; i < m; ++i) M.at(i, a) = M.at(i, a) + M.at(i, b);
      --step;
      continue;
    }
    done[p] = true;
    Rational d = M.at(p, p).rational_value();
    if (d.sign() > 0) ++sig.pos;
    else ++sig.neg;
    Expr pin = M.at(p, p).inv();
    for (int i = 0; i < m; ++i) {
      if (done[i] || M.at(i, p).is_zero()) continue;
      Expr f = M.at(i, p) * pin;
      for (int j = 0; j < m; ++j) M.at(i, j) = M.at(i, j) - f * M.at(p, j);
      for (int j = 0; j < m; ++j) M.at(j, i) = M.at(j, i) - f * M.at(j, p);
    }
  }
  sig.zero = m - sig.pos - sig.neg;
  return sig;
}

Subspace radical(const StructureConstants& A) {
  if (!A.parameter_free())
    throw DomainError("radical requires instantiated (parameter-free) constants");
  // Cartan criterion: rad A = [A,A]-orthogonal complement under the Killing form
  Mat K = killing_form(A);
  Subspace der = bracket_subspaces(A, Subspace::full(A.dim()), Subspace::full(A.dim()));
  if (der.dim() == 0) return Subspace::full(A.dim());
  Mat sys(der.dim(), A.dim());
  for (int i = 0; i < der.dim(); ++i) {
    std::vector<Expr> kd = K.apply(der.basis_vector(i));
    for (int j = 0; j < A.dim(); ++j) sys.at(i, j) = kd[j];
  }
  Subspace rad = Subspace::span(A.dim(), sys.null_space());
  if (!is_ideal(A, rad) || !is_solvable_subspace(A, rad))
    throw DomainError("radical computation failed internal checks");
  return rad;
}

namespace {

std::vector<int> complement_indices(const Subspace& s) {
  std::vector<int> idx;
  std::vector<bool> pivot(s.ambient(), false);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.ambient(); ++j)
      if (!s.basis().at(i, j).is_zero()) {
        pivot[j] = true;
        break;
      }
  for (int j = 0; j < s.ambient(); ++j)
    if (!pivot[j]) idx.push_back(j);
  return idx;
}

}  // namespace

Subspace nilradical(const StructureConstants& A) {
  if (!A.parameter_free())
    throw DomainError("nilradical requires instantiated (parameter-free) constants");
  int m = A.dim();
  Subspace rad = radical(A);
  // nilradical of A equals the nilradical of its radical; grow greedily from
  // the bracket of the radical (always inside the nilradical).
  Subspace cand = bracket_subspaces(A, rad, rad);
  if (!is_nilpotent_subspace(A, cand) || !is_ideal(A, cand)) {
    // [R,R] is nilpotent for solvable R; anything else is an internal error
    throw DomainError("nilradical seed failed nilpotency");
  }
  bool grew = true;
  while (grew) {
    grew = false;
    // greedy pass over radical basis vectors
    for (int i = 0; i < rad.dim() && !grew; ++i) {
      std::vector<Expr> v = rad.basis_vector(i);
      if (cand.contains(v)) continue;
      Subspace bigger = cand.sum(Subspace::span(m, Mat::from_rows({v})));
      if (is_ideal(A, bigger) && is_nilpotent_subspace(A, bigger)) {
        cand = bigger;
        grew = true;
      }
    }
    if (grew) continue;
    // grid search over small rational combinations of a radical complement of cand
    Subspace inter = rad.intersect(cand);
    std::vector<std::vector<Expr>> rows;
    for (int i = 0; i < rad.dim(); ++i) {
      std::vector<Expr> v = rad.basis_vector(i);
      if (!cand.contains(v)) rows.push_back(v);
    }
    if (rows.empty()) break;
    int r = (int)rows.size();
    std::vector<int> t(r, -2);
    while (true) {
      bool all_zero = true;
      for (int k = 0; k < r; ++k)
        if (t[k] != 0) all_zero = false;
      if (!all_zero) {
        std::vector<Expr> v(m);
        for (int k = 0; k < r; ++k)
          for (int j = 0; j < m; ++j) v[j] = v[j] + Expr(t[k]) * rows[k][j];
        if (!cand.contains(v)) {
          Subspace bigger = cand.sum(Subspace::span(m, Mat::from_rows({v})));
          if (is_ideal(A, bigger) && is_nilpotent_subspace(A, bigger)) {
            cand = bigger;
            grew = true;
            break;
          }
        }
      }
      int k = 0;
      while (k < r && t[k] == 2) t[k++] = -2;
      if (k == r) break;
      ++t[k];
    }
  }
  return cand;
}

std::optional<std::vector<Expr>> coordinates_in(const Subspace& s, const std::vector<Expr>& v) {
  std::vector<Expr> r = v;
  std::vector<Expr> coords(s.dim(), Expr(0));
  for (int i = 0; i < s.dim(); ++i) {
    int pc = -1;
    for (int j = 0; j < s.ambient(); ++j)
      if (!s.basis().at(i, j).is_zero()) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    if (r[pc].is_zero()) continue;
    Expr f = r[pc];
    coords[i] = f;
    for (int j = 0; j < s.ambient(); ++j) r[j] = r[j] - f * s.basis().at(i, j);
  }
  for (const Expr& e : r)
    if (!e.is_zero()) return std::nullopt;
  return coords;
}

StructureConstants subalgebra_constants(const StructureConstants& A, const Subspace& s) {
  if (!is_subalgebra(A, s)) throw DomainError("subspace is not a subalgebra");
  StructureConstants B(std::max(s.dim(), 1), A.params());
  if (s.dim() == 0) return B;
  std::vector<BracketEntry> entries;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      std::vector<Expr> w = A.bracket(s.basis_vector(i), s.basis_vector(j));
      auto coords = coordinates_in(s, w);
      if (!coords) throw DomainError("bracket escaped the subalgebra");
      BracketEntry e{i, j, {}};
      for (int k = 0; k < s.dim(); ++k)
        if (!(*coords)[k].is_zero()) e.coeffs.push_back({k, (*coords)[k]});
      if (!e.coeffs.empty()) entries.push_back(e);
    }
  return StructureConstants::from_brackets(s.dim(), entries, A.params());
}

std::pair<StructureConstants, std::vector<int>> quotient_constants(const StructureConstants& A,
                                                                   const Subspace& ideal) {
  if (!is_ideal(A, ideal)) throw DomainError("quotient by a non-ideal");
  int m = A.dim();
  std::vector<int> reps = complement_indices(ideal);
  int q = (int)reps.size();
  if (q == 0) throw DomainError("quotient by the whole algebra");
  // reduce a vector mod the ideal, then read complement coordinates
  auto project = [&](std::vector<Expr> w) {
    for (int i = 0; i < ideal.dim(); ++i) {
      int pc = -1;
      for (int j = 0; j < m; ++j)
        if (!ideal.basis().at(i, j).is_zero()) {
          pc = j;
          break;
        }
      if (pc < 0 || w[pc].is_zero()) continue;
      Expr f = w[pc];
      for (int j = 0; j < m; ++j) w[j] = w[j] - f * ideal.basis().at(i, j);
    }
    std::vector<Expr> out(q);
    for (int k = 0; k < q; ++k) out[k] = w[reps[k]];
    return out;
  };
  std::vector<BracketEntry> entries;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      std::vector<Expr> a(m), b(m);
      a[reps[i]] = Expr(1);
      b[reps[j]] = Expr(1);
      std::vector<Expr> w = project(A.bracket(a, b));
      BracketEntry e{i, j, {}};
      for (int k = 0; k < q; ++k)
        if (!w[k].is_zero()) e.coeffs.push_back({k, w[k]});
      if (!e.coeffs.empty()) entries.push_back(e);
    }
  return {StructureConstants::from_brackets(q, entries, A.params()), reps};
}

}  // namespace lie
