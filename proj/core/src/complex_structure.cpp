#include "abh/complex_structure.hpp"

#include <stdexcept>

#include "abh/errors.hpp"
#include "abh/kform.hpp"

namespace abh {

ComplexStructure ComplexStructure::adapted(int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("ComplexStructure: dimension must be even and positive");
  Matrix J(dim, dim);
  for (int k = 1; 2 * k <= dim; ++k) {
    J(2 * k - 1, 2 * k - 2) = Rational(-1);  // J e_{2k-1} = -e_{2k}
    J(2 * k - 2, 2 * k - 1) = Rational(1);   // J e_{2k}   =  e_{2k-1}
  }
  return ComplexStructure(std::move(J), true);
}

ComplexStructure ComplexStructure::from_matrix(Matrix J) {
  if (J.rows() != J.cols()) throw std::invalid_argument("ComplexStructure: square matrix required");
  const int dim = static_cast<int>(J.rows());
  if (dim % 2 != 0) throw std::invalid_argument("ComplexStructure: odd dimension");
  Matrix sq = J * J;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Rational expected = (i == j) ? Rational(-1) : Rational(0);
      if (sq(i, j) != expected)
        throw std::invalid_argument("ComplexStructure: J^2 != -Id");
    }
  bool adapted = (J == ComplexStructure::adapted(dim).matrix());
  return ComplexStructure(std::move(J), adapted);
}

std::vector<std::pair<std::pair<int, int>, Vec>> nijenhuis_defects(const LieAlgebra& alg,
                                                                   const ComplexStructure& J) {
  if (alg.dim() != J.dim()) throw std::invalid_argument("nijenhuis: dimension mismatch");
  std::vector<std::pair<std::pair<int, int>, Vec>> defects;
  for (int i = 1; i <= alg.dim(); ++i)
    for (int j = i + 1; j <= alg.dim(); ++j) {
      Vec ei(alg.dim()), ej(alg.dim());
      ei[i - 1] = Rational(1);
      ej[j - 1] = Rational(1);
      const Vec Ji = J.apply(ei), Jj = J.apply(ej);
      const Vec n = alg.bracket(Ji, Jj) - J.apply(alg.bracket(Ji, ej)) -
                    J.apply(alg.bracket(ei, Jj)) - alg.bracket(ei, ej);
      if (!is_zero(n)) defects.push_back({{i, j}, n});
    }
  return defects;
}

bool is_complex_structure(const LieAlgebra& alg, const ComplexStructure& J) {
  return nijenhuis_defects(alg, J).empty();
}

bool is_abelian(const LieAlgebra& alg, const ComplexStructure& J) {
  if (alg.dim() != J.dim()) throw std::invalid_argument("is_abelian: dimension mismatch");
  // Test 1: [JX, JY] = [X, Y] on basis pairs.
  bool bracket_test = true;
  for (int i = 1; i <= alg.dim() && bracket_test; ++i)
    for (int j = i + 1; j <= alg.dim() && bracket_test; ++j) {
      Vec ei(alg.dim()), ej(alg.dim());
      ei[i - 1] = Rational(1);
      ej[j - 1] = Rational(1);
      if (!is_zero(alg.bracket(J.apply(ei), J.apply(ej)) - alg.bracket(ei, ej)))
        bracket_test = false;
    }
  // Test 2: J(de^k) = de^k for every k.
  bool invariance_test = true;
  for (int k = 1; k <= alg.dim() && invariance_test; ++k) {
    const KForm dk = alg.d_basis_one_form(k);
    if (!(apply_J(dk, J.matrix()) == dk)) invariance_test = false;
  }
  if (bracket_test != invariance_test)
    throw internal_error("is_abelian: bracket and d-invariance characterisations disagree");
  return bracket_test;
}

}  // namespace abh
