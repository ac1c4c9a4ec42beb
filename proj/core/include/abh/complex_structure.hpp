#pragma once

#include <utility>
#include <vector>

#include "abh/lie_algebra.hpp"
#include "abh/linalg.hpp"

namespace abh {

/// Almost complex structure J with J^2 = -Id, column convention
/// J e_j = sum_i J_ij e_i. Integrability (vanishing Nijenhuis tensor) is a
/// separate check against a Lie algebra.
class ComplexStructure {
public:
  /// The standard adapted structure, J e_{2k-1} = -e_{2k}.
  static ComplexStructure adapted(int dim);
  /// Validates shape, even dimension and J^2 = -Id.
  static ComplexStructure from_matrix(Matrix J);

  int dim() const { return static_cast<int>(J_.rows()); }
  const Matrix& matrix() const { return J_; }
  bool is_adapted() const { return adapted_; }

  Vec apply(const Vec& x) const { return J_.apply(x); }
  Vec apply_basis(int j) const { return J_.col(static_cast<std::size_t>(j - 1)); }

  friend bool operator==(const ComplexStructure& a, const ComplexStructure& b) = default;

private:
  explicit ComplexStructure(Matrix J, bool adapted) : J_(std::move(J)), adapted_(adapted) {}
  Matrix J_;
  bool adapted_;
};

/// N(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] - [X, Y] on all basis pairs;
/// returns the pairs with nonvanishing defect.
std::vector<std::pair<std::pair<int, int>, Vec>> nijenhuis_defects(const LieAlgebra& alg,
                                                                   const ComplexStructure& J);

bool is_complex_structure(const LieAlgebra& alg, const ComplexStructure& J);

/// Abelian type: [JX, JY] = [X, Y] for all X, Y; equivalently every de^k is
/// J-invariant. Both characterisations are computed and must agree.
bool is_abelian(const LieAlgebra& alg, const ComplexStructure& J);

}  // namespace abh
