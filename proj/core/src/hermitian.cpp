#include "abh/hermitian.hpp"

#include <cmath>
#include <stdexcept>

#include "abh/errors.hpp"

namespace abh {

HermitianStructure::HermitianStructure(LieAlgebra alg, ComplexStructure J)
    : alg_(std::move(alg)), J_(std::move(J)) {}

HermitianStructure HermitianStructure::adapted(LieAlgebra alg) {
  if (alg.dim() % 2 != 0)
    throw std::invalid_argument("HermitianStructure: even dimension required");
  ComplexStructure J = ComplexStructure::adapted(alg.dim());
  return HermitianStructure(std::move(alg), std::move(J));
}

KForm HermitianStructure::fundamental_form() const {
  KFormBuilder b(dim(), 2);
  for (int k = 1; k <= n(); ++k) b.add({2 * k - 1, 2 * k}, Rational(1));
  return b.take();
}

KForm codifferential_F(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  const int m = h.dim();
  // sum_i [Je_i, e_i]
  Vec s(m);
  for (int i = 1; i <= m; ++i) {
    Vec ei(m);
    ei[i - 1] = Rational(1);
    s = s + alg.bracket(h.J().apply_basis(i), ei);
  }
  KFormBuilder out(m, 1);
  const Rational half(1, 2);
  for (int j = 1; j <= m; ++j) {
    const Rational tr = alg.ad(h.J().apply_basis(j)).trace();
    const Rational value = tr - half * s[j - 1];  // g = Id in the adapted frame
    if (!value.is_zero()) out.add({j}, value);
  }
  return out.take();
}

BalancedCertificate balanced_certificate(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  if (!alg.is_unimodular())
    throw std::invalid_argument(
        "balanced_certificate: the balanced criteria are only equivalent on unimodular algebras");
  const int m = h.dim();
  const int n = h.n();
  BalancedCertificate cert{true, Vec(m), true, std::nullopt, Rational(0),
                           true, std::nullopt, true, KForm(m, 1)};

  // Criterion 1: sum_i [Je_i, e_i] = 0.
  for (int i = 1; i <= m; ++i) {
    Vec ei(m);
    ei[i - 1] = Rational(1);
    cert.bracket_sum = cert.bracket_sum + alg.bracket(h.J().apply_basis(i), ei);
  }
  cert.bracket_sum_zero = is_zero(cert.bracket_sum);

  // Criterion 2: sum_i c_{2i-1,2i}^k = 0 for every k.
  for (int k = 1; k <= m; ++k) {
    Rational sum;
    for (int i = 1; i <= n; ++i) sum += alg.structure_constant(2 * i - 1, 2 * i, k);
    if (!sum.is_zero()) {
      cert.structure_sums_zero = false;
      if (!cert.structure_witness_k) {
        cert.structure_witness_k = k;
        cert.structure_witness_sum = sum;
      }
    }
  }

  // Criterion 3: F^{n-1} ^ de^k = 0 for every k.
  const KForm f_pow = wedge_power(h.fundamental_form(), n - 1);
  for (int k = 1; k <= m; ++k) {
    if (!wedge(f_pow, alg.d_basis_one_form(k)).is_zero()) {
      cert.top_wedge_zero = false;
      if (!cert.top_wedge_witness_k) cert.top_wedge_witness_k = k;
    }
  }

  // Criterion 4: d*F = 0.
  cert.codifferential = codifferential_F(h);
  cert.codifferential_zero = cert.codifferential.is_zero();

  if (cert.bracket_sum_zero != cert.structure_sums_zero ||
      cert.bracket_sum_zero != cert.top_wedge_zero ||
      cert.bracket_sum_zero != cert.codifferential_zero)
    throw internal_error("balanced_certificate: equivalent criteria disagree");
  return cert;
}

bool is_balanced(const HermitianStructure& h) { return balanced_certificate(h).balanced(); }

namespace {

void validate_hermitian_pair(const LieAlgebra& alg, const ComplexStructure& J, const Matrix& g) {
  const auto m = static_cast<std::size_t>(alg.dim());
  if (J.dim() != alg.dim()) throw std::invalid_argument("adapt_basis: J shape mismatch");
  if (g.rows() != m || g.cols() != m) throw std::invalid_argument("adapt_basis: g shape mismatch");
  if (!g.is_symmetric()) throw std::invalid_argument("adapt_basis: g not symmetric");
  // compatibility g(J., J.) = g(., .)  <=>  J^t g J = g
  if (!(J.matrix().transposed() * g * J.matrix() == g))
    throw std::invalid_argument("adapt_basis: g is not J-compatible");
}

Rational inner(const Matrix& g, const Vec& x, const Vec& y) { return dot(x, g.apply(y)); }

}  // namespace

AdaptedFrame adapt_basis(const LieAlgebra& alg, const ComplexStructure& J, const Matrix& g,
                         double tolerance) {
  validate_hermitian_pair(alg, J, g);
  const int m = alg.dim();

  // Complex Gram-Schmidt over the rationals: each accepted vector v brings
  // its partner -Jv, so the frame is J-adapted by construction. Exactness
  // fails as soon as one pivot g(v, v) is not a perfect rational square.
  std::vector<Vec> frame;
  bool exact = true;
  for (int t = 1; t <= m && static_cast<int>(frame.size()) < m; ++t) {
    Vec v(m);
    v[t - 1] = Rational(1);
    for (const Vec& f : frame) v = v - inner(g, v, f) * f;
    if (is_zero(v)) continue;
    const Rational pivot = inner(g, v, v);
    if (pivot.sign() <= 0)
      throw std::invalid_argument("adapt_basis: g is not positive definite");
    const auto root = pivot.exact_sqrt();
    if (!root) {
      exact = false;
      break;
    }
    const Vec f = (Rational(1) / *root) * v;
    frame.push_back(f);
    frame.push_back(Rational(-1) * J.apply(f));
  }

  AdaptedFrame result;
  if (exact && static_cast<int>(frame.size()) == m) {
    result.exact = true;
    result.change_of_basis = Matrix(m, m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) result.change_of_basis(i, j) = frame[j][i];
    return result;
  }

  // Approximate mode: redo the whole computation in doubles.
  std::vector<std::vector<double>> gd(m, std::vector<double>(m));
  std::vector<std::vector<double>> Jd(m, std::vector<double>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      gd[i][j] = g(i, j).to_double();
      Jd[i][j] = J.matrix()(i, j).to_double();
    }
  auto dapply = [m](const std::vector<std::vector<double>>& mat, const std::vector<double>& x) {
    std::vector<double> y(m, 0.0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) y[i] += mat[i][j] * x[j];
    return y;
  };
  auto dinner = [&](const std::vector<double>& x, const std::vector<double>& y) {
    const auto gy = dapply(gd, y);
    double s = 0;
    for (int i = 0; i < m; ++i) s += x[i] * gy[i];
    return s;
  };
  std::vector<std::vector<double>> dframe;
  for (int t = 0; t < m && static_cast<int>(dframe.size()) < m; ++t) {
    std::vector<double> v(m, 0.0);
    v[t] = 1.0;
    for (const auto& f : dframe) {
      const double p = dinner(v, f);
      for (int i = 0; i < m; ++i) v[i] -= p * f[i];
    }
    const double norm2 = dinner(v, v);
    if (norm2 < tolerance) continue;  // dependent direction
    const double inv = 1.0 / std::sqrt(norm2);
    std::vector<double> f(m), jf;
    for (int i = 0; i < m; ++i) f[i] = v[i] * inv;
    jf = dapply(Jd, f);
    for (int i = 0; i < m; ++i) jf[i] = -jf[i];
    dframe.push_back(f);
    dframe.push_back(jf);
  }
  if (static_cast<int>(dframe.size()) != m)
    throw std::invalid_argument("adapt_basis: g is not positive definite");
  double residual = 0.0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const double want = (a == b) ? 1.0 : 0.0;
      residual = std::max(residual, std::abs(dinner(dframe[a], dframe[b]) - want));
    }
  result.exact = false;
  result.residual = residual;
  result.approx.assign(m, std::vector<double>(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) result.approx[i][j] = dframe[j][i];
  return result;
}

HermitianStructure to_adapted_structure(const LieAlgebra& alg, const AdaptedFrame& frame) {
  if (!frame.exact)
    throw std::invalid_argument(
        "to_adapted_structure: approximate frames are rejected by the exact pipeline");
  return HermitianStructure::adapted(alg.change_basis(frame.change_of_basis));
}

}  // namespace abh
