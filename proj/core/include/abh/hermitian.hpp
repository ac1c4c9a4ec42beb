#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abh/complex_structure.hpp"
#include "abh/kform.hpp"
#include "abh/lie_algebra.hpp"
#include "abh/linalg.hpp"

namespace abh {

/// Hermitian structure held in an adapted orthonormal frame: the metric is
/// the identity, J is the standard adapted structure, and the fundamental
/// form is F = sum_k e^{2k-1} ^ e^{2k}. Structures handed over in another
/// frame must go through adapt_basis first.
class HermitianStructure {
public:
  /// Wraps an even-dimensional algebra whose basis is already adapted.
  static HermitianStructure adapted(LieAlgebra alg);

  const LieAlgebra& alg() const { return alg_; }
  int dim() const { return alg_.dim(); }
  int n() const { return alg_.dim() / 2; }
  const ComplexStructure& J() const { return J_; }
  KForm fundamental_form() const;

  friend bool operator==(const HermitianStructure& a, const HermitianStructure& b) = default;

private:
  HermitianStructure(LieAlgebra alg, ComplexStructure J);
  LieAlgebra alg_;
  ComplexStructure J_;
};

/// d*F as an exact 1-form, d*F(X) = tr(ad_{JX}) - (1/2) g(sum_i [Je_i, e_i], X),
/// in the adapted orthonormal frame.
KForm codifferential_F(const HermitianStructure& h);

/// The balanced property evaluated through each of its equivalent criteria;
/// they are proved to coincide on unimodular algebras, so any disagreement
/// raises internal_error.
struct BalancedCertificate {
  bool bracket_sum_zero;  // sum_i [Je_i, e_i] = 0
  Vec bracket_sum;
  bool structure_sums_zero;  // sum_i c_{2i-1,2i}^k = 0 for all k
  std::optional<int> structure_witness_k;
  Rational structure_witness_sum;
  bool top_wedge_zero;  // F^{n-1} ^ de^k = 0 for all k
  std::optional<int> top_wedge_witness_k;
  bool codifferential_zero;  // d*F = 0
  KForm codifferential;

  bool balanced() const { return bracket_sum_zero; }
};

/// Requires a unimodular algebra (the criteria are only equivalent there).
BalancedCertificate balanced_certificate(const HermitianStructure& h);
bool is_balanced(const HermitianStructure& h);

/// Result of searching an orthonormal J-adapted frame for a compatible pair
/// (J, g). The frame is exact when every Gram-Schmidt pivot is a perfect
/// rational square; otherwise it is computed in floating point and tainted,
/// and exact operations refuse it.
struct AdaptedFrame {
  bool exact;
  Matrix change_of_basis;                  // columns are the new frame (exact case)
  std::vector<std::vector<double>> approx; // approximate frame otherwise
  double residual = 0.0;                   // max orthonormality defect (approx case)
};

/// Gram-Schmidt adaptation of (alg, J, g). g must be symmetric positive
/// definite and J-compatible; J must square to -Id.
AdaptedFrame adapt_basis(const LieAlgebra& alg, const ComplexStructure& J, const Matrix& g,
                         double tolerance = 1e-12);

/// Applies an exact adapted frame: returns the Hermitian structure whose
/// algebra carries the structure constants rewritten in the new frame.
HermitianStructure to_adapted_structure(const LieAlgebra& alg, const AdaptedFrame& frame);

}  // namespace abh
