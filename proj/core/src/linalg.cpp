#include "abh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace abh {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix apply: length mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec sum: length mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec difference: length mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec operator*(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rref(Matrix& m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    const Rational inv = Rational(1) / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank(Matrix m) { return rref(m); }

std::vector<Vec> kernel(const Matrix& input) {
  Matrix m = input;
  rref(m);
  std::vector<std::ptrdiff_t> pivot_of_col(m.cols(), -1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t j = 0;
    while (j < m.cols() && m(i, j).is_zero()) ++j;
    if (j == m.cols()) break;
    pivot_of_col[j] = static_cast<std::ptrdiff_t>(i);
    ++r;
  }
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    Vec v(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (pivot_of_col[j] >= 0)
        v[j] = -m(static_cast<std::size_t>(pivot_of_col[j]), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RowSpace::insert(Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("RowSpace: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];  // by value: the loop below writes v[pivot]
    if (!c.is_zero())
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= c * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Rational inv = Rational(1) / v[p];
  for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = rows_[r][p];
    if (!c.is_zero())
      for (std::size_t j = p; j < ambient_; ++j) rows_[r][j] -= c * v[j];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::contains(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("RowSpace: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (!c.is_zero())
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= c * rows_[r][j];
  }
  return abh::is_zero(v);
}

bool RowSpace::contains(const RowSpace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  for (const Vec& v : vectors) s.space_.insert(v);
  return s;
}

Subspace Subspace::kernel_of(const Matrix& m) {
  Subspace s(m.cols());
  for (Vec& v : kernel(m)) s.space_.insert(std::move(v));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim);
    e[i] = Rational(1);
    s.space_.insert(std::move(e));
  }
  return s;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw std::invalid_argument("Subspace sum: ambient mismatch");
  Subspace s = *this;
  for (const Vec& v : other.basis()) s.space_.insert(v);
  return s;
}

}  // namespace abh
