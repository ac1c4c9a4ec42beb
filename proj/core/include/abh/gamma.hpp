#pragma once

#include <vector>

#include "abh/hermitian.hpp"
#include "abh/kform.hpp"
#include "abh/linalg.hpp"

namespace abh {

/// The space Gamma_q of J-invariant 2-forms with F^{n-1} ^ eta = 0 supported
/// on the first q adapted pairs; Gamma_n is the full space Gamma, identified
/// with su(n) under phi. dim Gamma_q = q^2 - 1.
struct GammaSpace {
  int n;
  int q;
  std::vector<KForm> basis;  // gamma_{ij} (lexicographic) then beta_r

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Basis per gamma_{ij} = e^{2i-1, j} - e^{2i} ^ J e^j (2i < j <= 2q) and
/// beta_r = e^{2r-1, 2r} - e^{2r+1, 2r+2} (r < q).
GammaSpace gamma_basis(int n, int q);

/// Exact membership of a 2-form in the row space of the basis.
bool in_gamma(const KForm& eta, const GammaSpace& space);

/// Coordinate-free membership in Gamma: J eta = eta and F^{n-1} ^ eta = 0.
bool satisfies_gamma_conditions(const KForm& eta, const HermitianStructure& h);

/// phi(e^{ij}) = E_ij - E_ji, the identification of 2-forms with skew
/// matrices; phi_inverse requires a skew input.
Matrix phi(const KForm& eta);
KForm phi_inverse(const Matrix& m);

}  // namespace abh
