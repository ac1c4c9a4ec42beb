#include "abh/connection.hpp"

#include <stdexcept>

#include "abh/complex_structure.hpp"
#include "abh/errors.hpp"

namespace abh {

ConnectionForms::ConnectionForms(Kind kind, int dim)
    : kind_(kind), dim_(dim),
      forms_(static_cast<std::size_t>(dim) * dim, KForm(dim, 1)) {}

std::size_t ConnectionForms::idx(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw std::invalid_argument("ConnectionForms: index out of range");
  return static_cast<std::size_t>(i - 1) * dim_ + (j - 1);
}

bool ConnectionForms::is_metric_compatible() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i; j <= dim_; ++j)
      if (!(sigma(i, j) == -sigma(j, i))) return false;
  return true;
}

CurvatureForms::CurvatureForms(int dim)
    : dim_(dim), forms_(static_cast<std::size_t>(dim) * dim, KForm(dim, 2)) {}

std::size_t CurvatureForms::idx(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw std::invalid_argument("CurvatureForms: index out of range");
  return static_cast<std::size_t>(i - 1) * dim_ + (j - 1);
}

ConnectionForms levi_civita_forms(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  const int m = h.dim();
  ConnectionForms out(ConnectionForms::Kind::levi_civita, m);
  const Rational half(1, 2);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      KFormBuilder b(m, 1);
      for (int k = 1; k <= m; ++k) {
        const Rational v = half * (alg.structure_constant(j, k, i) -
                                   alg.structure_constant(i, j, k) +
                                   alg.structure_constant(k, i, j));
        if (!v.is_zero()) b.add({k}, v);
      }
      out.sigma(i, j) = b.take();
    }
  return out;
}

KForm bismut_torsion(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  const int m = h.dim();
  const KForm dF = differential(h.fundamental_form(), alg);
  const KForm torsion = apply_J(dF, h.J().matrix());
  if (is_abelian(alg, h.J())) {
    KForm alt(m, 3);
    for (int i = 1; i <= m; ++i)
      alt = alt + wedge(KForm::basis(m, {i}), alg.d_basis_one_form(i));
    if (!(alt == torsion))
      throw internal_error("bismut_torsion: JdF != sum e^i ^ de^i on an abelian structure");
  }
  return torsion;
}

ConnectionForms bismut_forms(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  const int m = h.dim();
  const KForm torsion = bismut_torsion(h);
  const ConnectionForms lc = levi_civita_forms(h);
  ConnectionForms out(ConnectionForms::Kind::bismut, m);
  const Rational half(1, 2);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      KFormBuilder b(m, 1);
      for (int k = 1; k <= m; ++k) {
        const Rational torsion_ijk =
            (i == j || j == k || i == k) ? Rational(0) : torsion.coefficient({i, j, k});
        const Rational v = lc.sigma(i, j).coefficient({k}) - half * torsion_ijk;
        if (!v.is_zero()) b.add({k}, v);
      }
      out.sigma(i, j) = b.take();
    }

  if (is_abelian(alg, h.J())) {
    // Short form valid for abelian J: sigma^i_j = -sum_k c_ij^k e^k.
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        KFormBuilder b(m, 1);
        for (int k = 1; k <= m; ++k) {
          const Rational c = alg.structure_constant(i, j, k);
          if (!c.is_zero()) b.add({k}, -c);
        }
        if (!(b.take() == out.sigma(i, j)))
          throw internal_error("bismut_forms: general formula disagrees with the abelian short form");
      }
    const int n = m / 2;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (!(out.sigma(2 * i, 2 * j) == out.sigma(2 * i - 1, 2 * j - 1)) ||
            !(out.sigma(2 * i - 1, 2 * j) == -out.sigma(2 * i, 2 * j - 1)))
          throw internal_error("bismut_forms: abelian pair symmetry violated");
      }
  }
  return out;
}

CurvatureForms curvature_forms(const ConnectionForms& sigma, const LieAlgebra& alg) {
  if (sigma.dim() != alg.dim())
    throw std::invalid_argument("curvature_forms: dimension mismatch");
  const int m = alg.dim();
  CurvatureForms out(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      KForm omega = differential(sigma.sigma(i, j), alg);
      for (int k = 1; k <= m; ++k)
        omega = omega + wedge(sigma.sigma(i, k), sigma.sigma(k, j));
      out.omega(i, j) = omega;
    }
  return out;
}

std::vector<CurvatureEndomorphism> curvature_endomorphisms(const CurvatureForms& omega) {
  const int m = omega.dim();
  std::vector<CurvatureEndomorphism> out;
  for (int r = 1; r <= m; ++r)
    for (int s = r + 1; s <= m; ++s) {
      KFormBuilder b(m, 2);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          const Rational v = omega.omega(i, j).coefficient({r, s});
          if (!v.is_zero()) b.add({i, j}, -v);
        }
      out.push_back({r, s, b.take()});
    }
  return out;
}

KForm covariant_derivative_2form(const ConnectionForms& sigma, int j, const KForm& gamma) {
  if (gamma.degree() != 2)
    throw std::invalid_argument("covariant_derivative_2form: degree 2 required");
  const int m = sigma.dim();
  if (gamma.ambient_dim() != m)
    throw std::invalid_argument("covariant_derivative_2form: dimension mismatch");
  if (j < 1 || j > m)
    throw std::invalid_argument("covariant_derivative_2form: direction out of range");
  // cache sigma^k_s(e_j)
  Matrix sj(m, m);
  for (int k = 1; k <= m; ++k)
    for (int s = 1; s <= m; ++s) sj(k - 1, s - 1) = sigma.sigma(k, s).coefficient({j});
  auto gcoef = [&](int a, int b) {
    if (a == b) return Rational(0);
    return gamma.coefficient({a, b});
  };
  KFormBuilder out(m, 2);
  for (int r = 1; r <= m; ++r)
    for (int s = r + 1; s <= m; ++s) {
      Rational v;
      for (int k = 1; k <= m; ++k)
        v += sj(k - 1, s - 1) * gcoef(k, r) - sj(k - 1, r - 1) * gcoef(k, s);
      if (!v.is_zero()) out.add({r, s}, v);
    }
  return out.take();
}

Rational riemannian_scalar_curvature(const HermitianStructure& h) {
  const CurvatureForms omega = curvature_forms(levi_civita_forms(h), h.alg());
  const int m = h.dim();
  Rational scal;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      Vec ei(m), ej(m);
      ei[i - 1] = Rational(1);
      ej[j - 1] = Rational(1);
      scal += eval(omega.omega(i, j), {ei, ej});
    }
  return Rational(2) * scal;
}

}  // namespace abh
