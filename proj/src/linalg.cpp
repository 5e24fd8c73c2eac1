#include "pmalcev/linalg.hpp"

#include <algorithm>
#include <utility>

#include "pmalcev/errors.hpp"

namespace pmalcev {

Vec zero_vec(std::size_t dim) { return Vec(dim); }

Vec basis_vec(std::size_t dim, std::size_t index) {
  Vec v(dim);
  v[index] = 1;
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Vec& a, const Scalar& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& x) { return x == 0; });
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square()) throw DimensionMismatch("pow requires a square matrix");
  Matrix acc = identity(rows_);
  for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse requires a square matrix");
  const std::size_t n = rows_;
  Matrix work(*this);
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Scalar p = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Scalar f = work.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix/vector shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix shapes differ");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix shapes differ");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("inner dimensions differ");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& f = a.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.at(i, j) += f * b.at(k, j);
    }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = s * a.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a) { return Scalar(-1) * a; }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix dual_map(const Matrix& m) { return m.transpose(); }

Matrix mat_invert(const Matrix& m) { return m.inverse(); }

bool Tensor3::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& x) { return x == 0; });
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

}  // namespace pmalcev
