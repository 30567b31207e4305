#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lie/matrix.hpp"

namespace lie {

struct JacobiViolation {
  int i, j, k, r;
  Expr residual;
};

struct BracketEntry {
  int i, j;                                  // 0-based basis indices, i < j
  std::vector<std::pair<int, Expr>> coeffs;  // (k, c^k_ij)
};

/// Structure constants c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k.
/// Antisymmetry is synthesized from the i<j entries; coefficients may carry
/// named family parameters as exact rational functions.
class StructureConstants {
 public:
  explicit StructureConstants(int dim, std::vector<std::string> params = {});
  static StructureConstants from_brackets(int dim, const std::vector<BracketEntry>& entries,
                                          std::vector<std::string> params = {});

  int dim() const { return m_; }
  const Expr& c(int k, int i, int j) const { return c_[(k * m_ + i) * m_ + j]; }
  const std::vector<std::string>& params() const { return params_; }
  bool parameter_free() const;

  std::vector<Expr> bracket(const std::vector<Expr>& u, const std::vector<Expr>& v) const;
  std::vector<JacobiViolation> jacobi_violations() const;
  bool jacobi_ok() const { return jacobi_violations().empty(); }

  // New basis e~_mu = sum_nu P_nu,mu e_nu (column convention).
  StructureConstants change_basis(const Mat& P) const;

  // Paper's sign convention: ad u maps v to [v, u].
  Mat ad_matrix(int mu) const;
  Mat ad_of(const std::vector<Expr>& u) const;

  static StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);

  StructureConstants instantiate(const std::map<std::string, Rational>& values) const;

  bool operator==(const StructureConstants& o) const;
  std::string str() const;

 private:
  void set(int k, int i, int j, const Expr& v);
  int m_;
  std::vector<Expr> c_;
  std::vector<std::string> params_;
};

// Subspace operations through the bracket.
Subspace bracket_subspaces(const StructureConstants& A, const Subspace& s1, const Subspace& s2);

std::vector<Subspace> derived_series(const StructureConstants& A);
std::vector<Subspace> lower_central_series(const StructureConstants& A);
std::vector<Subspace> upper_central_series(const StructureConstants& A);
Subspace center(const StructureConstants& A);

bool is_subalgebra(const StructureConstants& A, const Subspace& s);
bool is_ideal(const StructureConstants& A, const Subspace& s);
bool is_solvable(const StructureConstants& A);
bool is_nilpotent(const StructureConstants& A);
bool is_solvable_subspace(const StructureConstants& A, const Subspace& s);
bool is_nilpotent_subspace(const StructureConstants& A, const Subspace& s);

// Maximal solvable/nilpotent ideals; require parameter-free constants.
Subspace radical(const StructureConstants& A);
Subspace nilradical(const StructureConstants& A);

Mat killing_form(const StructureConstants& A);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};
// Sylvester signature of the Killing form; parameter-free input only.
Signature killing_signature(const StructureConstants& A);

// Coordinates of v in the row basis of s, if v lies in s.
std::optional<std::vector<Expr>> coordinates_in(const Subspace& s, const std::vector<Expr>& v);

// Induced structure constants on a subalgebra basis (rows of s).
StructureConstants subalgebra_constants(const StructureConstants& A, const Subspace& s);

// Quotient by an ideal: returns the quotient constants and the indices of the
// standard basis vectors used as complement representatives.
std::pair<StructureConstants, std::vector<int>> quotient_constants(const StructureConstants& A,
                                                                   const Subspace& ideal);

}  // namespace lie
