#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abh/assoc_algebra.hpp"
#include "abh/hermitian.hpp"
#include "abh/lie_algebra.hpp"

namespace abh {

/// h_{2n+1} x R^{2k+1} with the r-th balanced complex structure class,
/// delivered in an adapted frame (f_1,...,f_{2n}, z_0,...,z_{2k+1}).
/// Requires n >= 2 and 1 <= r <= floor(n/2); the excluded classes carry no
/// balanced metric.
HermitianStructure heisenberg(int n, int k, int r);

/// aff(A) = A + A with [(a,b),(a',b')] = (0, ab' - ba') and the standard
/// abelian structure J(a,b) = (b,-a), in the interleaved adapted frame
/// (u_1, v_1, u_2, v_2, ...). A must be commutative, associative, nilpotent.
struct AffResult {
  HermitianStructure structure;
  bool balanced;  // true iff sum_i e_i^2 = 0 in the chosen orthonormal basis
};
AffResult aff(const AssocAlgebra& a);

/// Commuting traceless complex matrices M_1..M_m acting on C^n; the data of
/// the semidirect products C^m x| C^n.
struct ComplexMatrixRep {
  int m, n;
  std::vector<std::pair<Matrix, Matrix>> matrices;  // (real, imaginary) parts, n x n
};

/// Realification of C^m x|_pi C^n with the abelian structure J = -I on the
/// C^m factor and J = I on C^n, in the adapted frame that reproduces the
/// reference structure equations of the named examples.
HermitianStructure semidirect_realification(const ComplexMatrixRep& rep);

/// The generic 8-dimensional nilpotent family with an adapted abelian
/// balanced structure. Coefficients arrive in the order
///   c12^5 c13^5 c14^5 | c12^6 c13^6 c14^6 |
///   c12^7 c34^7 c13^7 c14^7 c15^7 c16^7 c35^7 c36^7 |
///   c12^8 c34^8 c13^8 c14^8 c15^8 c16^8 c35^8 c36^8.
enum class Family8Class {
  not_lie,       // Jacobi fails
  abelian,
  g1,            // center dim 4, quaternionic-Heisenberg x R pattern
  g2,            // center dim 4, complex-Heisenberg x R^2 pattern
  g3,            // center dim 4, h5 x R^3 pattern
  two_step_II1,  // center dim 2, de^5 = de^6 = 0
  three_step_II2 // center dim 2, de^5 and de^6 independent
};

struct Family8Result {
  LieAlgebra alg;  // lax mode
  bool jacobi_ok;
  std::vector<std::pair<int, KForm>> defects;
  Family8Class classification;
};
Family8Result family8(const std::array<Rational, 22>& coefficients);
std::string family8_class_name(Family8Class c);

/// Named catalog entries with their parameter schemas.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> params;  // e.g. {"n", "k", "r"} or {"lambda"}
  bool nilpotent;
  std::string note;  // frame / convention remarks
};
const std::vector<CatalogEntry>& catalog_entries();

/// Builds a named example; throws std::invalid_argument on unknown names or
/// out-of-range parameters.
HermitianStructure named_structure(const std::string& name,
                                   const std::map<std::string, Rational>& params = {});

}  // namespace abh
