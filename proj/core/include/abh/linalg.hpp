#pragma once

#include <cstddef>
#include <vector>

#include "abh/rational.hpp"

namespace abh {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals. Indices are 0-based here; the 1-based
/// convention of the file formats is translated at the parsing boundary.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix transposed() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  Rational trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  Vec apply(const Vec& x) const;  // matrix * column vector

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& a);
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);

/// In-place reduced row echelon form; returns the rank. Rows are fully
/// reduced and pivots normalised to 1, so the output is canonical for the
/// row space.
std::size_t rref(Matrix& m);
std::size_t rank(Matrix m);

/// Canonical basis of the kernel {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel(const Matrix& m);

/// Row space in canonical reduced echelon form. Supports incremental
/// insertion, which the holonomy closure relies on.
class RowSpace {
public:
  explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Inserts a vector; returns true when it enlarged the space.
  bool insert(Vec v);
  bool contains(Vec v) const;
  bool contains(const RowSpace& other) const;

  friend bool operator==(const RowSpace& a, const RowSpace& b) = default;

private:
  std::size_t ambient_;
  std::vector<Vec> rows_;      // canonical RREF rows
  std::vector<std::size_t> pivots_;  // pivot column of each row, increasing
};

/// A linear subspace of a fixed coordinate space, held as a canonical
/// reduced-echelon basis so equal subspaces compare equal.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : space_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace kernel_of(const Matrix& m);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return space_.ambient(); }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Vec>& basis() const { return space_.rows(); }

  bool contains(const Vec& v) const { return space_.contains(v); }
  bool contains(const Subspace& other) const { return space_.contains(other.space_); }
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  RowSpace space_;
};

}  // namespace abh
