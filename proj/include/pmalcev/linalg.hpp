#pragma once

#include <cstddef>
#include <vector>

#include "pmalcev/scalar.hpp"

namespace pmalcev {

/// Coordinate vector in a fixed basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t dim);
Vec basis_vec(std::size_t dim, std::size_t index);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& s);
bool vec_is_zero(const Vec& a);

/// Dense matrix of exact rationals. Column j holds the image of the j-th
/// source basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Matrix transpose() const;
  Matrix pow(unsigned k) const;  // square matrices only

  /// Exact inverse by Gauss-Jordan elimination over the rationals.
  /// Throws SingularMatrix when the determinant vanishes and
  /// DimensionMismatch when not square.
  Matrix inverse() const;

  Vec apply(const Vec& v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Transpose with respect to dual bases: <m*(xi), v> = <xi, m(v)>.
Matrix dual_map(const Matrix& m);

/// Free-function spelling of Matrix::inverse.
Matrix mat_invert(const Matrix& m);

/// Element of A (x) A in a fixed basis; a plain square Matrix with tensor
/// semantics r = sum r[i][j] e_i (x) e_j.
using Tensor2 = Matrix;

/// Cubical tensor of exact rationals.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), entries_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dim_ + j) * dim_ + k];
  }

  bool is_zero() const;

  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace pmalcev
