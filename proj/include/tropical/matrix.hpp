#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical {

/// Dense column vector over the max-plus semifield. Freshly constructed
/// vectors are filled with the zero element.
class Vector {
 public:
  explicit Vector(std::size_t n) : e_(n) {}
  Vector(std::initializer_list<Scalar> init) : e_(init) {}

  std::size_t size() const { return e_.size(); }
  Scalar& operator[](std::size_t i) { return e_[i]; }
  Scalar operator[](std::size_t i) const { return e_[i]; }

  bool all_finite() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> e_;
};

/// Dense matrix over the max-plus semifield, row-major. Freshly constructed
/// matrices are the zero matrix of their shape.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Scalar> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vector column(std::size_t j) const;

  bool is_square() const { return rows_ == cols_; }
  bool all_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

Vector operator+(const Vector& x, const Vector& y);
Vector operator*(Scalar c, const Vector& x);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Scalar c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);

Matrix transpose(const Matrix& a);

/// p-fold tropical product; p = 0 gives the identity (undefined for the
/// zero matrix, which has no well-defined 0th power).
Matrix pow(const Matrix& a, unsigned p);

/// Tropical trace: the max over diagonal entries.
Scalar trace(const Matrix& a);

/// True iff every node of the support digraph (edge i -> j when a_ij is
/// nonzero) lies on a directed path of length >= 1 to every node, i.e. the
/// digraph is strongly connected and carries at least one cycle.
bool is_irreducible(const Matrix& a);

/// Entry-wise multiplicative inverses of an all-finite vector (the
/// conjugate row vector).
Vector conjugate(const Vector& x);

/// The form x^- (x) A (x) x = max_{ij}(a_ij - x_i + x_j) for all-finite x.
Scalar quadratic_form(const Matrix& a, const Vector& x);

/// True iff y = c (x) x for some finite scalar c, within tol on the
/// entry-wise differences.
bool collinear(const Vector& x, const Vector& y, double tol = 1e-9);

}  // namespace tropical
