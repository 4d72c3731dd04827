#include "tropical/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tropical {

namespace {

constexpr double kUnitDiagonalTol = 1e-9;

void require_irreducible(const Matrix& a, const char* who) {
  if (!is_irreducible(a)) {
    throw std::invalid_argument(std::string(who) + ": irreducible matrix required");
  }
}

}  // namespace

Scalar eigenvalue(const Matrix& a) {
  require_irreducible(a, "tropical::eigenvalue");
  const std::size_t n = a.rows();
  Scalar lambda = Scalar::zero();
  Matrix p = a;
  for (std::size_t k = 1; k <= n; ++k) {
    lambda += pow(trace(p), 1.0 / static_cast<double>(k));
    if (k < n) p = p * a;
  }
  // An irreducible support digraph carries a cycle, so some trace is finite.
  return lambda;
}

Matrix star_like_matrix(const Matrix& a, Scalar lambda) {
  if (!a.is_square()) {
    throw std::invalid_argument("tropical::star_like_matrix: square matrix required");
  }
  if (lambda.is_zero()) {
    throw std::domain_error("tropical::star_like_matrix: zero normalization");
  }
  const Matrix scaled = inv(lambda) * a;
  Matrix acc = scaled;
  Matrix p = scaled;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    p = p * scaled;
    acc = acc + p;
  }
  return acc;
}

EigenData eigenbasis(const Matrix& a) {
  const Scalar lambda = eigenvalue(a);
  const Matrix closure = star_like_matrix(a, lambda);
  const std::size_t n = a.rows();

  std::vector<Vector> kept;
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar diag = closure(j, j);
    if (diag.is_zero() || std::abs(diag.value()) > kUnitDiagonalTol) continue;
    Vector col = closure.column(j);
    bool duplicate = false;
    for (const Vector& h : kept) {
      if (collinear(h, col)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(std::move(col));
  }
  if (kept.empty()) {
    throw std::logic_error(
        "tropical::eigenbasis: no unit-diagonal column in the star-like matrix");
  }

  Matrix basis(n, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = kept[j][i];
  return {lambda, basis};
}

std::pair<Scalar, Vector> min_quadratic_form(const Matrix& a, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("tropical::min_quadratic_form: alpha outside [0, 1]");
  }
  const EigenData direct = eigenbasis(a);
  const EigenData transposed = eigenbasis(transpose(a));
  const Vector u = direct.basis.column(0);
  const Vector v = transposed.basis.column(0);

  Vector x(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    x[i] = pow(u[i], alpha) * pow(v[i], alpha - 1.0);
  }
  return {direct.eigenvalue, x};
}

}  // namespace tropical
