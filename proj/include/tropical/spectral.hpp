#pragma once

#include <utility>

#include "tropical/matrix.hpp"

namespace tropical {

// Spectral data of an irreducible matrix: the (unique) eigenvalue and a
// basis of the eigencone. Columns are pairwise non-collinear, all entries
// finite, and each column g satisfies A g = lambda g.
struct EigenData {
  Scalar eigenvalue;
  Matrix basis;
};

// Eigenvalue of an irreducible matrix via the trace formula
//   lambda = max over k in 1..n of tr(A^k)^(1/k).
// Throws std::invalid_argument if A is not irreducible.
Scalar eigenvalue(const Matrix& a);

// The star-like sum lambda^-1 A + lambda^-2 A^2 + ... + lambda^-n A^n.
// Throws std::domain_error if lambda is the tropical zero.
Matrix star_like_matrix(const Matrix& a, Scalar lambda);

// Eigenvalue plus the eigencone basis: columns of the star-like matrix with
// unit diagonal entry, with columns collinear to an earlier kept column
// dropped. Throws std::logic_error if no unit-diagonal column exists, which
// cannot happen for irreducible input.
EigenData eigenbasis(const Matrix& a);

// Minimizer of the form x^- A x over all finite vectors x. Returns the
// minimum (the eigenvalue) together with x_i = u_i^alpha * v_i^(alpha-1),
// where u is the first basis column of A and v the first basis column of
// A transposed. Requires 0 <= alpha <= 1 and irreducible A.
std::pair<Scalar, Vector> min_quadratic_form(const Matrix& a, double alpha);

}  // namespace tropical
