#pragma once

#include <vector>

#include "lie/matrix.hpp"

namespace lie {

// Univariate polynomials over Q as coefficient vectors, index = power.
// Used on characteristic polynomials of small rational matrices.
namespace upoly {

using Coeffs = std::vector<Rational>;

int degree(const Coeffs& p);
Coeffs mul(const Coeffs& a, const Coeffs& b);
// division with remainder; q and r returned
void divmod(const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r);
Rational eval(const Coeffs& p, const Rational& x);

// Monic characteristic polynomial of a parameter-free square matrix
// (Faddeev-LeVerrier).
Coeffs char_poly(const Mat& m);

// All rational roots with multiplicities; also returns the root-free cofactor.
struct Roots {
  std::vector<std::pair<Rational, int>> roots;
  Coeffs cofactor;
};
Roots rational_roots(const Coeffs& p);

// p(M) for a rational matrix M.
Mat eval_at(const Mat& m, const Coeffs& p);

// For a monic quadratic x^2 + px + q with negative discriminant: interpret as
// (x - (beta + i gamma))(x - (beta - i gamma)); returns false when gamma is
// irrational over Q.
bool complex_pair(const Coeffs& quad, Rational& beta, Rational& gamma);

}  // namespace upoly

}  // namespace lie
