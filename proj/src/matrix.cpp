#include "lie/matrix.hpp"

#include <sstream>

namespace lie {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Expr(1);
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Expr>>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows(); ++i) {
    if ((int)rows[i].size() != m.cols()) throw DomainError("ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw DomainError("matrix product shape mismatch");
  Mat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        p.at(i, j) = p.at(i, j) + at(i, k) * o.at(k, j);
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix sum shape mismatch");
  Mat s(r_, c_);
  for (int i = 0; i < r_ * c_; ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scale(Expr(-1)); }

Mat Mat::scale(const Expr& k) const {
  Mat s(r_, c_);
  for (int i = 0; i < r_ * c_; ++i) s.a_[i] = a_[i] * k;
  return s;
}

bool Mat::operator==(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (int i = 0; i < r_ * c_; ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const Expr& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Expr> Mat::row(int i) const {
  std::vector<Expr> v(c_);
  for (int j = 0; j < c_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Expr> Mat::apply(const std::vector<Expr>& v) const {
  if ((int)v.size() != c_) throw DomainError("matrix apply shape mismatch");
  std::vector<Expr> w(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) w[i] = w[i] + at(i, j) * v[j];
  return w;
}

Mat::Echelon Mat::echelon() const {
  Echelon e{*this, {}, {}, 0};
  Mat& m = e.rref;
  int lead = 0;
  for (int col = 0; col < c_ && lead < r_; ++col) {
    int piv = -1;
    for (int i = lead; i < r_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Expr p = m.at(lead, col);
    e.pivots.push_back(p);
    e.pivot_cols.push_back(col);
    Expr pinv = p.inv();
    for (int j = 0; j < c_; ++j) m.at(lead, j) = m.at(lead, j) * pinv;
    for (int i = 0; i < r_; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Expr f = m.at(i, col);
      for (int j = 0; j < c_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(lead, j);
    }
    ++lead;
  }
  e.rank = lead;
  return e;
}

Mat Mat::null_space() const {
  Echelon e = echelon();
  std::vector<int> free_cols;
  {
    size_t k = 0;
    for (int j = 0; j < c_; ++j) {
      if (k < e.pivot_cols.size() && e.pivot_cols[k] == j) ++k;
      else free_cols.push_back(j);
    }
  }
  Mat ns((int)free_cols.size(), c_);
  for (int v = 0; v < (int)free_cols.size(); ++v) {
    int fc = free_cols[v];
    ns.at(v, fc) = Expr(1);
    for (size_t k = 0; k < e.pivot_cols.size(); ++k)
      ns.at(v, e.pivot_cols[k]) = -e.rref.at((int)k, fc);
  }
  // canonicalize the basis itself
  return ns.echelon().rref;
}

Expr Mat::det() const {
  if (r_ != c_) throw DomainError("determinant of non-square matrix");
  Mat m = *this;
  Expr d(1);
  for (int col = 0; col < c_; ++col) {
    int piv = -1;
    for (int i = col; i < r_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Expr(0);
    if (piv != col) {
      for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d = d * m.at(col, col);
    Expr pinv = m.at(col, col).inv();
    for (int i = col + 1; i < r_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Expr f = m.at(i, col) * pinv;
      for (int j = col; j < c_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (r_ != c_) throw DomainError("inverse of non-square matrix");
  Mat aug(r_, 2 * c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = Expr(1);
  }
  Mat red = aug.echelon().rref;
  for (int i = 0; i < r_; ++i)
    if (red.at(i, i) != Expr(1)) throw DomainError("matrix is singular");
  Mat inv(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = red.at(i, c_ + j);
  return inv;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[ ";
    for (int j = 0; j < c_; ++j) os << at(i, j).str() << (j + 1 < c_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

Mat mat_vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DomainError("vstack width mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

Subspace Subspace::span(int ambient, const Mat& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient) throw DomainError("ambient dimension mismatch");
  Subspace s(ambient);
  if (rows.rows() == 0) return s;
  Mat::Echelon e = rows.echelon();
  Mat b(e.rank, ambient);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < ambient; ++j) b.at(i, j) = e.rref.at(i, j);
  s.basis_ = b;
  return s;
}

Subspace Subspace::full(int ambient) { return span(ambient, Mat::identity(ambient)); }

bool Subspace::contains(const std::vector<Expr>& v) const {
  std::vector<Expr> r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    if (r[pc].is_zero()) continue;
    Expr f = r[pc];
    for (int j = 0; j < ambient_; ++j) r[j] = r[j] - f * basis_.at(i, j);
  }
  for (const Expr& e : r)
    if (!e.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw DomainError("subspace sum: ambient mismatch");
  return span(ambient_, mat_vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw DomainError("subspace intersection: ambient mismatch");
  // x = a^T U = b^T W: solve [U^T | -W^T] kernel, read off the U part
  int ru = dim(), rw = o.dim();
  if (ru == 0 || rw == 0) return Subspace(ambient_);
  Mat sys(ambient_, ru + rw);
  for (int i = 0; i < ambient_; ++i) {
    for (int k = 0; k < ru; ++k) sys.at(i, k) = basis_.at(k, i);
    for (int k = 0; k < rw; ++k) sys.at(i, ru + k) = -o.basis_.at(k, i);
  }
  Mat ker = sys.null_space();
  Mat vecs(ker.rows(), ambient_);
  for (int v = 0; v < ker.rows(); ++v)
    for (int j = 0; j < ambient_; ++j) {
      Expr acc(0);
      for (int k = 0; k < ru; ++k) acc = acc + ker.at(v, k) * basis_.at(k, j);
      vecs.at(v, j) = acc;
    }
  return span(ambient_, vecs);
}

Subspace Subspace::image_under(const Mat& m) const {
  if (m.cols() != ambient_) throw DomainError("image_under: shape mismatch");
  Mat rows(dim(), m.rows());
  for (int i = 0; i < dim(); ++i) {
    std::vector<Expr> w = m.apply(basis_vector(i));
    for (int j = 0; j < m.rows(); ++j) rows.at(i, j) = w[j];
  }
  return span(m.rows(), rows);
}

int Subspace::cmp(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient() ? -1 : 1;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient(); ++j)
      if (int c = Expr::cmp(a.basis_.at(i, j), b.basis_.at(i, j)); c != 0) return c;
  return 0;
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << "; ";
    bool first = true;
    for (int j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j).is_zero()) continue;
      Expr c = basis_.at(i, j);
      if (!first) os << " + ";
      if (!c.is_one()) os << "(" << c.str() << ")*";
      os << "e" << (j + 1);
      first = false;
    }
    if (first) os << "0";
  }
  os << "}";
  return os.str();
}

}  // namespace lie
