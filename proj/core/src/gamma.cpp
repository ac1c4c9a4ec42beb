#include "abh/gamma.hpp"

#include <stdexcept>

namespace abh {

GammaSpace gamma_basis(int n, int q) {
  if (n < 1) throw std::invalid_argument("gamma_basis: n must be positive");
  if (q < 1 || q > n) throw std::invalid_argument("gamma_basis: q out of range");
  const int dim = 2 * n;
  GammaSpace space{n, q, {}};
  // gamma_{ij} = e^{2i-1, j} - e^{2i} ^ J e^j. On the adapted structure
  // J e^{2k-1} = -e^{2k} and J e^{2k} = e^{2k-1}, so the two flavours are
  //   gamma_{i, 2k-1} = e^{2i-1, 2k-1} + e^{2i, 2k},
  //   gamma_{i, 2k}   = e^{2i-1, 2k}   - e^{2i, 2k-1}.
  for (int i = 1; i <= q; ++i)
    for (int j = 2 * i + 1; j <= 2 * q; ++j) {
      KFormBuilder b(dim, 2);
      b.add({2 * i - 1, j}, Rational(1));
      if (j % 2 == 1)
        b.add({2 * i, j + 1}, Rational(1));
      else
        b.add({2 * i, j - 1}, Rational(-1));
      space.basis.push_back(b.take());
    }
  for (int r = 1; r <= q - 1; ++r) {
    KFormBuilder b(dim, 2);
    b.add({2 * r - 1, 2 * r}, Rational(1));
    b.add({2 * r + 1, 2 * r + 2}, Rational(-1));
    space.basis.push_back(b.take());
  }
  return space;
}

bool in_gamma(const KForm& eta, const GammaSpace& space) {
  if (eta.degree() != 2) throw std::invalid_argument("in_gamma: degree 2 required");
  if (eta.ambient_dim() != 2 * space.n)
    throw std::invalid_argument("in_gamma: ambient dimension mismatch");
  RowSpace rows(tuple_space_dim(eta.ambient_dim(), 2));
  for (const KForm& b : space.basis) rows.insert(b.to_vector());
  return rows.contains(eta.to_vector());
}

bool satisfies_gamma_conditions(const KForm& eta, const HermitianStructure& h) {
  if (eta.degree() != 2) throw std::invalid_argument("gamma conditions: degree 2 required");
  if (eta.ambient_dim() != h.dim())
    throw std::invalid_argument("gamma conditions: ambient dimension mismatch");
  if (!(apply_J(eta, h.J().matrix()) == eta)) return false;
  return wedge(wedge_power(h.fundamental_form(), h.n() - 1), eta).is_zero();
}

Matrix phi(const KForm& eta) {
  if (eta.degree() != 2) throw std::invalid_argument("phi: degree 2 required");
  const int m = eta.ambient_dim();
  Matrix out(m, m);
  for (const auto& [t, c] : eta.terms()) {
    out(t[0] - 1, t[1] - 1) = c;
    out(t[1] - 1, t[0] - 1) = -c;
  }
  return out;
}

KForm phi_inverse(const Matrix& m) {
  if (!m.is_skew_symmetric()) throw std::invalid_argument("phi_inverse: skew matrix required");
  const int dim = static_cast<int>(m.rows());
  KFormBuilder b(dim, 2);
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j)
      if (!m(i - 1, j - 1).is_zero()) b.add({i, j}, m(i - 1, j - 1));
  return b.take();
}

}  // namespace abh
