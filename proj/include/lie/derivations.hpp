#pragma once

#include "lie/structure.hpp"

namespace lie {

/// Linear space of m x m matrices with a canonical basis (RREF of row-major
/// vectorizations). Used for Der(A) and Ad(A).
struct MatrixSpace {
  int ambient = 0;
  std::vector<Mat> basis;
  Subspace vectorized;       // subspace of Q^(m*m)
  std::vector<Expr> pivot_audit;  // non-constant pivots assumed nonzero during the solve

  int dim() const { return (int)basis.size(); }
  bool contains(const Mat& m) const;
  bool closed_under_commutator() const;
};

MatrixSpace matrix_space_from(int ambient, const std::vector<Mat>& gens,
                              std::vector<Expr> audit = {});

// Solution space of D[u,v] = [Du,v] + [u,Dv] over all basis pairs.
MatrixSpace derivation_algebra(const StructureConstants& A);

// Span of the ad e_mu matrices (paper sign: ad u maps v to [v,u]).
MatrixSpace inner_derivations(const StructureConstants& A);

bool is_derivation(const StructureConstants& A, const Mat& d);
bool is_automorphism_matrix(const StructureConstants& A, const Mat& alpha);

// Der(A) S subset of S
bool is_characteristic(const StructureConstants& A, const Subspace& s);
// characteristic and fixed (setwise) by every non-identity-component
// representative of Aut(A)
bool is_megaideal(const StructureConstants& A, const Subspace& s,
                  const std::vector<Mat>& aut_reps);

// centralizer {x : [x, S] = 0} and center preimage {x : [x, A] in S}
Subspace centralizer(const StructureConstants& A, const Subspace& s);
Subspace center_preimage_of(const StructureConstants& A, const Subspace& s);

// All proper nonzero megaideals of a parameter-free algebra: candidates are
// harvested from canonical constructions (series, radicals, Killing kernel,
// eigen/primary subspaces of ad operators, scalar/trace preimages of invariant
// actions, Lemma-1 closure) and then filtered by is_megaideal. Sorted by
// (dim, canonical basis order).
std::vector<Subspace> generate_megaideals(const StructureConstants& A,
                                          const std::vector<Mat>& aut_reps);

}  // namespace lie
