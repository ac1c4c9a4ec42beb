#pragma once

#include <vector>

#include "abh/hermitian.hpp"
#include "abh/kform.hpp"

namespace abh {

/// Matrix of connection 1-forms sigma^i_j(e_k) = g(nabla_{e_k} e_j, e_i) in
/// the adapted orthonormal frame. Metric connections have sigma^i_j = -sigma^j_i.
class ConnectionForms {
public:
  enum class Kind { levi_civita, bismut };

  ConnectionForms(Kind kind, int dim);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  /// 1-based indices.
  const KForm& sigma(int i, int j) const { return forms_[idx(i, j)]; }
  KForm& sigma(int i, int j) { return forms_[idx(i, j)]; }

  bool is_metric_compatible() const;  // sigma^i_j == -sigma^j_i

private:
  std::size_t idx(int i, int j) const;
  Kind kind_;
  int dim_;
  std::vector<KForm> forms_;
};

/// Matrix of curvature 2-forms Omega^i_j = d sigma^i_j + sum_k sigma^i_k ^ sigma^k_j.
class CurvatureForms {
public:
  explicit CurvatureForms(int dim);
  int dim() const { return dim_; }
  const KForm& omega(int i, int j) const { return forms_[idx(i, j)]; }
  KForm& omega(int i, int j) { return forms_[idx(i, j)]; }

private:
  std::size_t idx(int i, int j) const;
  int dim_;
  std::vector<KForm> forms_;
};

/// Levi-Civita 1-forms from the Koszul formula,
/// (sigma^g)^i_j(e_k) = (c^i_jk - c^k_ij + c^j_ki) / 2.
ConnectionForms levi_civita_forms(const HermitianStructure& h);

/// Bismut torsion 3-form T = J dF. When J is abelian the alternative
/// expression sum_i e^i ^ de^i is computed as well and asserted equal.
KForm bismut_torsion(const HermitianStructure& h);

/// Bismut 1-forms sigma^i_j(e_k) = (sigma^g)^i_j(e_k) - T(e_i, e_j, e_k)/2.
/// With abelian J the short form sigma^i_j = -sum_k c_ij^k e^k and the pair
/// symmetries sigma^{2i}_{2j} = sigma^{2i-1}_{2j-1},
/// sigma^{2i-1}_{2j} = -sigma^{2i}_{2j-1} are asserted.
ConnectionForms bismut_forms(const HermitianStructure& h);

CurvatureForms curvature_forms(const ConnectionForms& sigma, const LieAlgebra& alg);

/// Curvature endomorphisms as 2-forms, R^{rs}(e_i, e_j) = -Omega^i_j(e_r, e_s),
/// listed over r < s in lexicographic order.
struct CurvatureEndomorphism {
  int r, s;
  KForm form;
};
std::vector<CurvatureEndomorphism> curvature_endomorphisms(const CurvatureForms& omega);

/// (nabla_{e_j} gamma)(e_r, e_s) =
///   sum_k ( sigma^k_s(e_j) gamma(e_k, e_r) - sigma^k_r(e_j) gamma(e_k, e_s) ).
KForm covariant_derivative_2form(const ConnectionForms& sigma, int j, const KForm& gamma);

/// Riemannian scalar curvature of the Levi-Civita connection,
/// scal = 2 sum_{i<j} Omega^i_j(e_i, e_j) in the adapted orthonormal frame.
Rational riemannian_scalar_curvature(const HermitianStructure& h);

}  // namespace abh
