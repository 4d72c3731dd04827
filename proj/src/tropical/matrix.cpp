#include "tropical/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tropical {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool Vector::all_finite() const {
  return std::all_of(e_.begin(), e_.end(), [](Scalar s) { return s.is_finite(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Scalar> entries)
    : rows_(rows), cols_(cols), e_(entries) {
  require(e_.size() == rows * cols, "Matrix: entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::all_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Scalar s) { return s.is_zero(); });
}

Vector operator+(const Vector& x, const Vector& y) {
  require(x.size() == y.size(), "vector addition: size mismatch");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vector operator*(Scalar c, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "matrix addition: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimension mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

Matrix operator*(Scalar c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require(a.cols() == x.size(), "matrix-vector product: dimension mismatch");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = Scalar::zero();
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    r[i] = acc;
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

Matrix pow(const Matrix& a, unsigned p) {
  require(a.is_square(), "matrix power: square matrix required");
  if (p == 0) {
    if (a.all_zero()) {
      throw std::domain_error("matrix power: zero matrix has no 0th power");
    }
    return Matrix::identity(a.rows());
  }
  Matrix r = a;
  for (unsigned k = 1; k < p; ++k) r = r * a;
  return r;
}

Scalar trace(const Matrix& a) {
  require(a.is_square(), "trace: square matrix required");
  Scalar t = Scalar::zero();
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

bool is_irreducible(const Matrix& a) {
  require(a.is_square(), "is_irreducible: square matrix required");
  const std::size_t n = a.rows();
  if (n == 1) return !a(0, 0).is_zero();

  // Strong connectivity of the support digraph: every node reachable from
  // node 0 following edges forward and backward.
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        Scalar edge = forward ? a(u, v) : a(v, u);
        if (!edge.is_zero() && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(true) && reaches_all(false);
}

Vector conjugate(const Vector& x) {
  if (!x.all_finite()) {
    throw std::domain_error("conjugate: vector must have all finite entries");
  }
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = inv(x[i]);
  return r;
}

Scalar quadratic_form(const Matrix& a, const Vector& x) {
  require(a.is_square() && a.rows() == x.size(),
          "quadratic_form: dimension mismatch");
  if (!x.all_finite()) {
    throw std::domain_error("quadratic_form: vector must have all finite entries");
  }
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) acc += inv(x[i]) * a(i, j) * x[j];
  return acc;
}

bool collinear(const Vector& x, const Vector& y, double tol) {
  if (x.size() != y.size()) return false;
  bool have_ratio = false;
  double ratio = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() != y[i].is_zero()) return false;
    if (x[i].is_zero()) continue;
    double d = y[i].value() - x[i].value();
    if (!have_ratio) {
      ratio = d;
      have_ratio = true;
    } else if (std::abs(d - ratio) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace tropical
