#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "abh/linalg.hpp"
#include "abh/rational.hpp"

namespace abh {

/// Strictly increasing 1-based index tuple, e.g. {1,3} for e^{13}.
using IndexTuple = std::vector<int>;

/// Exterior form of fixed degree over the dual of an m-dimensional space.
/// Coefficients are stored on strictly increasing index tuples only, zeros
/// are never stored, and the degree survives when all coefficients vanish.
/// Values are immutable once built; all operations return fresh forms.
class KForm {
public:
  explicit KForm(int ambient_dim, int degree);

  static KForm zero(int ambient_dim, int degree) { return KForm(ambient_dim, degree); }
  /// Basis monomial e^{i1...ik}; indices may arrive unordered, the sign of
  /// the sorting permutation is absorbed. Repeated indices give zero.
  static KForm basis(int ambient_dim, std::initializer_list<int> indices);
  static KForm basis(int ambient_dim, IndexTuple indices, Rational coeff = Rational(1));
  static KForm constant(int ambient_dim, Rational value);  // degree 0

  int ambient_dim() const { return ambient_dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coefficient(const IndexTuple& indices) const;
  const std::map<IndexTuple, Rational>& terms() const { return coeffs_; }

  KForm operator-() const;
  friend KForm operator+(const KForm& a, const KForm& b);
  friend KForm operator-(const KForm& a, const KForm& b);
  friend KForm operator*(const Rational& c, const KForm& a);
  friend bool operator==(const KForm& a, const KForm& b) = default;

  /// Renders like "e12 - 2 e34" (empty form renders "0").
  std::string str() const;

  /// Coefficient vector over all C(dim, k) tuples in lexicographic order.
  Vec to_vector() const;
  static KForm from_vector(int ambient_dim, int degree, const Vec& v);

private:
  void add_term(const IndexTuple& indices, const Rational& c);

  int ambient_dim_;
  int degree_;
  std::map<IndexTuple, Rational> coeffs_;

  friend KForm wedge(const KForm&, const KForm&);
  friend class KFormBuilder;
};

/// Mutable accumulator for building forms term by term.
class KFormBuilder {
public:
  KFormBuilder(int ambient_dim, int degree) : form_(ambient_dim, degree) {}
  /// Adds c * e^{indices}; unordered indices contribute their permutation sign.
  void add(IndexTuple indices, Rational c);
  KForm take() { return std::move(form_); }

private:
  KForm form_;
};

/// Exterior product. Bilinear, signs by permutation parity.
KForm wedge(const KForm& a, const KForm& b);
KForm wedge_power(const KForm& a, int exponent);

/// Alternating multilinear evaluation on deg(a) coordinate vectors.
Rational eval(const KForm& a, const std::vector<Vec>& vectors);

/// (J a)(X_1,...,X_k) = (-1)^k a(J X_1,..., J X_k); J in column convention.
KForm apply_J(const KForm& a, const Matrix& J);

/// Number of strictly increasing k-tuples in 1..dim and the lexicographic
/// position of one of them; used to flatten 2-forms for rank computations.
std::size_t tuple_space_dim(int ambient_dim, int degree);

std::ostream& operator<<(std::ostream& os, const KForm& f);

}  // namespace abh
