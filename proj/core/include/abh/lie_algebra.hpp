#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abh/kform.hpp"
#include "abh/linalg.hpp"

namespace abh {

/// One structure-constant entry: the coefficient of e^{ij} in de^k.
struct StructureEntry {
  int i, j, k;
  Rational c;

  friend bool operator==(const StructureEntry& a, const StructureEntry& b) = default;
};

struct SeriesInfo {
  std::optional<int> nilpotency_step;   // empty when the lower central series does not die
  std::optional<int> solvability_step;  // empty when the derived series does not die
  Subspace derived_algebra;
};

/// Lie algebra given by exact structure constants. The stored constants are
/// the differential coefficients, de^k = sum_{i<j} c_ij^k e^{ij}, and the
/// bracket follows the convention [e_i, e_j] = -sum_k c_ij^k e_k, so that
/// de^k(e_i, e_j) = -e^k([e_i, e_j]).
class LieAlgebra {
public:
  enum class Mode { strict, lax };

  /// strict mode rejects structure constants violating the Jacobi identity;
  /// lax mode constructs anyway (defects stay queryable via jacobi_defect).
  LieAlgebra(int dim, const std::vector<StructureEntry>& structure, Mode mode = Mode::strict);

  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  bool is_abelian_algebra() const { return c_.empty(); }

  /// c_ij^k with antisymmetry in (i, j); zero when i == j or unset.
  Rational structure_constant(int i, int j, int k) const;
  const std::map<std::array<int, 3>, Rational>& structure() const { return c_; }

  /// de^k as an explicit 2-form.
  KForm d_basis_one_form(int k) const;

  /// [x, y], bilinear and antisymmetric.
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const;

  /// Matrix of ad_x : y -> [x, y].
  Matrix ad(const Vec& x) const;

  /// All k with d(de^k) != 0, together with the defect 3-form. Empty exactly
  /// when the Jacobi identity holds.
  std::vector<std::pair<int, KForm>> jacobi_defect() const;
  bool jacobi_ok() const { return jacobi_defect().empty(); }

  /// true iff tr(ad_{e_i}) = 0 for every basis vector.
  bool is_unimodular() const;

  /// Kernel of x -> ad_x, canonical echelon basis.
  Subspace center() const;

  /// Lower central and derived series lengths plus the derived algebra.
  SeriesInfo series() const;

  /// dim ker(d on 1-forms) = dim - rank(d_1).
  int betti_1() const;

  /// Rank of d : Lambda^k -> Lambda^{k+1}.
  std::size_t d_rank(int degree) const;

  /// Conjugated copy: new basis f_j = sum_i P_ij e_i (P columns are the new
  /// frame); the result carries the structure constants in the f-frame.
  LieAlgebra change_basis(const Matrix& P) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

private:
  int dim_;
  std::map<std::array<int, 3>, Rational> c_;  // key (i, j, k) with i < j
};

/// Chevalley-Eilenberg differential, extended from 1-forms as an
/// antiderivation: d(a ^ b) = da ^ b + (-1)^deg(a) a ^ db.
KForm differential(const KForm& a, const LieAlgebra& alg);

/// Isomorphism-invariant signature: (dim, b1, center dim, derived dim,
/// nilpotency step, solvability step, ranks of d per degree).
struct Fingerprint {
  int dim = 0;
  int betti_1 = 0;
  int center_dim = 0;
  int derived_dim = 0;
  std::optional<int> nilpotency_step;
  std::optional<int> solvability_step;
  std::vector<std::size_t> d_ranks;  // degree 1 .. dim-1

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) = default;
  std::string str() const;
};

Fingerprint fingerprint(const LieAlgebra& alg);

}  // namespace abh
