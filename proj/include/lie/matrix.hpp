#pragma once

#include <initializer_list>
#include <vector>

#include "lie/expr.hpp"

namespace lie {

/// Dense matrix over Expr (exact rational-function entries; atoms allowed
/// and treated as independent indeterminates by elimination).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Expr>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Expr& at(int i, int j) { return a_[i * c_ + j]; }
  const Expr& at(int i, int j) const { return a_[i * c_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scale(const Expr& k) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  std::vector<Expr> row(int i) const;
  std::vector<Expr> apply(const std::vector<Expr>& v) const;  // this * v

  // Reduced row-echelon form. Records the pivot values encountered during
  // elimination (audit trail of what was assumed nonzero, relevant for
  // entries carrying parameters).
  struct Echelon;
  Echelon echelon() const;

  int rank() const;
  // Canonical null-space basis (RREF rows), x with A x = 0.
  Mat null_space() const;
  Expr det() const;
  Mat inverse() const;  // throws DomainError if det == 0

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Expr> a_;
};

struct Mat::Echelon {
  Mat rref;
  std::vector<int> pivot_cols;
  std::vector<Expr> pivots;
  int rank = 0;
};

inline int Mat::rank() const { return echelon().rank; }

Mat mat_vstack(const Mat& a, const Mat& b);

/// Subspace of Q(params)^ambient in canonical reduced row-echelon basis.
/// Two subspaces are equal iff their RREF matrices are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
  // rows spanning the subspace; reduced internally
  static Subspace span(int ambient, const Mat& rows);
  static Subspace full(int ambient);
  static Subspace zero(int ambient) { return Subspace(ambient); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<Expr> basis_vector(int i) const { return basis_.row(i); }

  bool contains(const std::vector<Expr>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Image under a linear map (columns convention: w = M v).
  Subspace image_under(const Mat& m) const;

  // deterministic order: by (dim, basis entries lexicographically)
  static int cmp(const Subspace& a, const Subspace& b);

  std::string str() const;

 private:
  int ambient_ = 0;
  Mat basis_;
};

}  // namespace lie
