#include <doctest.h>

#include "abh/catalog.hpp"
#include "abh/connection.hpp"
#include "generators.hpp"

using namespace abh;

namespace {

HermitianStructure g3() { return named_structure("g3"); }

Vec basis_vec(int dim, int i) {
  Vec v(dim);
  v[i - 1] = Rational(1);
  return v;
}

// Closed-form scalar curvature for 2-step nilpotent algebras with the
// identity metric: -(1/2) sum_{i<j} |[e_i, e_j]|^2.
Rational two_step_scalar_oracle(const LieAlgebra& alg) {
  Rational s;
  for (int i = 1; i <= alg.dim(); ++i)
    for (int j = i + 1; j <= alg.dim(); ++j) s += dot(alg.bracket_basis(i, j), alg.bracket_basis(i, j));
  return Rational(-1, 2) * s;
}

}  // namespace

TEST_CASE("levi-civita forms") {
  const ConnectionForms lc = levi_civita_forms(g3());
  CHECK(lc.is_metric_compatible());
  Vec e8 = basis_vec(8, 8);
  CHECK(eval(lc.sigma(1, 2), {e8}) == Rational(-1, 2));

  // h3 as a 3-dim structure is not Hermitian; use the raw formula through a
  // 6-dim product where the same constants appear: de^6 = e12
  const HermitianStructure h3r =
      HermitianStructure::adapted(LieAlgebra(6, {{1, 2, 6, Rational(1)}}));
  CHECK(eval(levi_civita_forms(h3r).sigma(1, 2), {basis_vec(6, 6)}) == Rational(-1, 2));

  const HermitianStructure flat = HermitianStructure::adapted(LieAlgebra::abelian(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(levi_civita_forms(flat).sigma(i, j).is_zero());
}

TEST_CASE("bismut torsion") {
  CHECK(bismut_torsion(g3()) ==
        KForm::basis(8, {1, 2, 8}) - KForm::basis(8, {3, 4, 8}));
  CHECK(bismut_torsion(HermitianStructure::adapted(LieAlgebra::abelian(6))).is_zero());
  // Kaehler-flat: dF = 0 forces T = 0; the abelian algebra is the obvious
  // instance but any closed F works, e.g. a product with central pairs only.
  const HermitianStructure central_sq =
      HermitianStructure::adapted(LieAlgebra(4, {}, LieAlgebra::Mode::strict));
  CHECK(bismut_torsion(central_sq).is_zero());
}

TEST_CASE("bismut connection forms") {
  const ConnectionForms b = bismut_forms(g3());
  CHECK(b.is_metric_compatible());
  CHECK(b.sigma(1, 2) == -KForm::basis(8, {8}));
  CHECK(b.sigma(3, 4) == KForm::basis(8, {8}));
  // central rows and columns vanish
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (i > 4 || j > 4) CHECK(b.sigma(i, j).is_zero());

  const HermitianStructure flat = HermitianStructure::adapted(LieAlgebra::abelian(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(bismut_forms(flat).sigma(i, j).is_zero());
}

TEST_CASE("curvature forms") {
  const HermitianStructure h = g3();
  const CurvatureForms omega = curvature_forms(bismut_forms(h), h.alg());
  CHECK(omega.omega(1, 2) == -KForm::basis(8, {1, 2}) + KForm::basis(8, {3, 4}));
  // abelian: flat
  const HermitianStructure flat = HermitianStructure::adapted(LieAlgebra::abelian(4));
  const CurvatureForms zero = curvature_forms(bismut_forms(flat), flat.alg());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(zero.omega(i, j).is_zero());
  // pair symmetries of the abelian case
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      CHECK(omega.omega(2 * i, 2 * j) == omega.omega(2 * i - 1, 2 * j - 1));
      CHECK(omega.omega(2 * i - 1, 2 * j) == -omega.omega(2 * i, 2 * j - 1));
    }
}

TEST_CASE("curvature endomorphisms") {
  const HermitianStructure h = g3();
  const auto endos = curvature_endomorphisms(curvature_forms(bismut_forms(h), h.alg()));
  REQUIRE(endos.size() == 28);
  const KForm beta1 = KForm::basis(8, {1, 2}) - KForm::basis(8, {3, 4});
  bool checked12 = false, checked56 = false;
  for (const auto& e : endos) {
    if (e.r == 1 && e.s == 2) {
      CHECK(e.form == beta1);
      checked12 = true;
    }
    if (e.r == 5 && e.s == 6) {
      CHECK(e.form.is_zero());
      checked56 = true;
    }
  }
  CHECK(checked12);
  CHECK(checked56);
}

TEST_CASE("covariant derivative of 2-forms") {
  const HermitianStructure h = g3();
  const ConnectionForms sigma = bismut_forms(h);
  // directions with sigma(X) = 0 give zero
  for (int j = 1; j <= 7; ++j)
    CHECK(covariant_derivative_2form(sigma, j, KForm::basis(8, {1, 2})).is_zero());
  // and the e8 direction annihilates e12 by cancellation
  CHECK(covariant_derivative_2form(sigma, 8, KForm::basis(8, {1, 2})).is_zero());
  CHECK_THROWS_AS(covariant_derivative_2form(sigma, 1, KForm::basis(8, {1})),
                  std::invalid_argument);
}

TEST_CASE("scalar curvature") {
  CHECK(riemannian_scalar_curvature(g3()) == Rational(-1));
  CHECK(riemannian_scalar_curvature(g3()) == two_step_scalar_oracle(g3().alg()));
  CHECK(riemannian_scalar_curvature(HermitianStructure::adapted(LieAlgebra::abelian(6))) ==
        Rational(0));

  // the anchor family: aff(B2)_lambda has scalar curvature -3 lambda^2
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 2), Rational(3, 5)}) {
    const HermitianStructure b2 = named_structure("aff_B2", {{"lambda", lambda}});
    CHECK(riemannian_scalar_curvature(b2) == Rational(-3) * lambda * lambda);
    CHECK(riemannian_scalar_curvature(b2) == two_step_scalar_oracle(b2.alg()));
  }
}

TEST_CASE("connection forms satisfy the defining torsion identities") {
  // Levi-Civita is torsion-free and Bismut has torsion tensor T:
  //   (sigma^g)^k_j(e_i) - (sigma^g)^k_i(e_j) + c_ij^k = 0
  //   sigma^k_j(e_i) - sigma^k_i(e_j) + c_ij^k = T(e_k, e_i, e_j)
  // both identities are checked against the raw structure constants, which
  // is independent of how the forms were assembled.
  auto check_structure = [](const HermitianStructure& h) {
    const LieAlgebra& alg = h.alg();
    const int m = h.dim();
    const ConnectionForms lc = levi_civita_forms(h);
    const ConnectionForms b = bismut_forms(h);
    const KForm torsion = bismut_torsion(h);
    CHECK(lc.is_metric_compatible());
    CHECK(b.is_metric_compatible());
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
          const Rational c = alg.structure_constant(i, j, k);
          const Rational lc_defect = lc.sigma(k, j).coefficient({i}) -
                                     lc.sigma(k, i).coefficient({j}) + c;
          CHECK(lc_defect.is_zero());
          const Rational t = (k == i || k == j || i == j)
                                 ? Rational(0)
                                 : torsion.coefficient({k, i, j});
          const Rational bismut_defect =
              b.sigma(k, j).coefficient({i}) - b.sigma(k, i).coefficient({j}) + c - t;
          CHECK(bismut_defect.is_zero());
        }
    // a Hermitian connection satisfies the adapted pair symmetries
    const int n = h.n();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(b.sigma(2 * i, 2 * j) == b.sigma(2 * i - 1, 2 * j - 1));
        CHECK(b.sigma(2 * i - 1, 2 * j) == -b.sigma(2 * i, 2 * j - 1));
      }
  };

  check_structure(g3());
  check_structure(named_structure("s6"));
  check_structure(named_structure("aff_B3"));

  // non-abelian integrable input: the realified complex Heisenberg with its
  // bi-invariant structure, carried into an adapted frame by adapt_basis
  const HermitianStructure ch = named_structure("complex_heisenberg_realified");
  Matrix I(6, 6);
  I(1, 0) = Rational(1);
  I(0, 1) = Rational(-1);
  for (int t = 2; t <= 3; ++t) {
    I(2 * t - 1, 2 * t - 2) = Rational(-1);
    I(2 * t - 2, 2 * t - 1) = Rational(1);
  }
  const ComplexStructure bi = ComplexStructure::from_matrix(I);
  REQUIRE(is_complex_structure(ch.alg(), bi));
  REQUIRE_FALSE(is_abelian(ch.alg(), bi));
  const AdaptedFrame frame = adapt_basis(ch.alg(), bi, Matrix::identity(6));
  REQUIRE(frame.exact);
  const HermitianStructure moved = to_adapted_structure(ch.alg(), frame);
  REQUIRE_FALSE(is_abelian(moved.alg(), moved.J()));
  check_structure(moved);
}

TEST_CASE("torsion lemma and short bismut form agree on every abelian entry") {
  // bismut_torsion and bismut_forms internally assert the abelian fast paths;
  // this drives them across the catalog.
  for (const char* name : {"g1", "g2", "g3", "s6", "step3", "aff_A1", "aff_B1", "aff_B3",
                           "complex_heisenberg_realified"}) {
    const HermitianStructure h = named_structure(name);
    CHECK_NOTHROW(bismut_forms(h));
  }
  CHECK_NOTHROW(bismut_forms(named_structure("M_lambda", {{"a", Rational(1)}, {"b", Rational(2)}})));
  CHECK_NOTHROW(bismut_forms(named_structure("aff_B2", {{"lambda", Rational(3)}})));
}
