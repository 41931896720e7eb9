#pragma once

// Dense exact matrices, subspaces of k^n and nilpotent Jordan types.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "degenlab/exactnum.hpp"

namespace degenlab {

using Vector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0L)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!degenlab::is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (degenlab::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!degenlab::is_zero(b(k, j))) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using RfMatrix = Matrix<RationalFunction>;

Vector mat_vec(const QMatrix& m, const Vector& v);

// Fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const QMatrix& m);
std::size_t rank(const RfMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

QMatrix invert(const QMatrix& m);    // throws Singular
RfMatrix invert(const RfMatrix& m);  // throws Singular
Rational determinant(const QMatrix& m);

// Non-increasing parts, all positive.
struct Partition {
  std::vector<int> parts;

  int size() const;
  // Parts equal to 1 removed: the label of T^lambda.
  Partition label() const;
  std::string to_string() const;
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

// Parts >= k counted as r_{k-1} - r_k where r_m = rank(N^m) and r_0 = total.
Partition partition_from_ranks(const std::vector<std::size_t>& ranks, std::size_t total);

// Jordan type of a nilpotent square matrix; throws NotNilpotent.
Partition nilpotent_partition(const QMatrix& n);

// A subspace of k^ambient stored by a basis in reduced row echelon form,
// so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // span(e_from, ..., e_{ambient-1}), 0-based.
  static Subspace tail(std::size_t ambient, std::size_t from);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const QMatrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
bool subspace_contains(const Subspace& outer, const Subspace& inner);

}  // namespace degenlab
