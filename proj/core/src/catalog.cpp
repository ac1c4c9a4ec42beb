#include "abh/catalog.hpp"

#include <stdexcept>

#include "abh/errors.hpp"

namespace abh {

HermitianStructure heisenberg(int n, int k, int r) {
  if (n < 1 || k < 0) throw std::invalid_argument("heisenberg: need n >= 1 and k >= 0");
  if (n == 1 || r == 0)
    throw std::invalid_argument(
        "heisenberg: no balanced metric exists for this class (n = 1 or r = 0)");
  if (r < 1 || r > n / 2)
    throw std::invalid_argument("heisenberg: r must lie in 1..floor(n/2)");
  const int dim = 2 * n + 2 * k + 2;
  const int z0 = 2 * n + 1;  // dual index of the centre generator z_0
  // [f_1, f_2] = (n+1-2r) z_0, [f_{2i-1}, f_{2i}] = z_0 (2 <= i <= r),
  // [f_{2i-1}, f_{2i}] = -z_0 (r < i <= n); hence de^{z0} carries -mu_i.
  std::vector<StructureEntry> entries;
  entries.push_back({1, 2, z0, Rational(-(n + 1 - 2 * r))});
  for (int i = 2; i <= r; ++i) entries.push_back({2 * i - 1, 2 * i, z0, Rational(-1)});
  for (int i = r + 1; i <= n; ++i) entries.push_back({2 * i - 1, 2 * i, z0, Rational(1)});
  return HermitianStructure::adapted(LieAlgebra(dim, entries));
}

AffResult aff(const AssocAlgebra& a) {
  if (!a.is_associative()) throw std::invalid_argument("aff: algebra is not associative");
  if (!a.is_nilpotent())
    throw std::invalid_argument("aff: algebra is not nilpotent, aff(A) would not be unimodular");
  const int n = a.dim();
  const int dim = 2 * n;
  // Adapted interleaved frame u_1, v_1, ..., u_n, v_n with J u_i = -v_i.
  // Brackets: [u_i, v_j] = sum_k a_ij^k v_k, everything else zero.
  auto u = [](int i) { return 2 * i - 1; };
  auto v = [](int i) { return 2 * i; };
  std::vector<StructureEntry> entries;
  auto add = [&entries](int i, int j, int k, const Rational& c) {
    if (c.is_zero()) return;
    if (i < j)
      entries.push_back({i, j, k, c});
    else
      entries.push_back({j, i, k, -c});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Vec p = a.multiply_basis(i, j);
      for (int k = 1; k <= n; ++k) {
        // [u_i, v_j] = sum_k a_ij^k v_k contributes -a_ij^k to the
        // coefficient of e^{u_i v_j} in de^{v_k}.
        if (!p[k - 1].is_zero()) add(u(i), v(j), v(k), -p[k - 1]);
      }
    }
  AffResult result{HermitianStructure::adapted(LieAlgebra(dim, entries)),
                   is_zero(a.sum_of_squares())};
  return result;
}

namespace {

// Columns of the real form of a complex matrix M acting on the adapted
// frame (u_1, -I u_1, ..., u_n, -I u_n): blocks [[re, im], [-im, re]].
Matrix realify(const Matrix& re, const Matrix& im) {
  const int n = static_cast<int>(re.rows());
  Matrix out(2 * n, 2 * n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      out(2 * i - 2, 2 * j - 2) = re(i - 1, j - 1);
      out(2 * i - 2, 2 * j - 1) = im(i - 1, j - 1);
      out(2 * i - 1, 2 * j - 2) = -im(i - 1, j - 1);
      out(2 * i - 1, 2 * j - 1) = re(i - 1, j - 1);
    }
  return out;
}

Matrix standard_block_J(int dim2n) {
  Matrix J0(dim2n, dim2n);
  for (int t = 1; 2 * t <= dim2n; ++t) {
    J0(2 * t - 1, 2 * t - 2) = Rational(-1);
    J0(2 * t - 2, 2 * t - 1) = Rational(1);
  }
  return J0;
}

}  // namespace

HermitianStructure semidirect_realification(const ComplexMatrixRep& rep) {
  if (rep.m < 1 || rep.n < 1)
    throw std::invalid_argument("semidirect_realification: m, n must be positive");
  if (static_cast<int>(rep.matrices.size()) != rep.m)
    throw std::invalid_argument("semidirect_realification: expected m matrices");
  std::vector<Matrix> real_forms;
  for (const auto& [re, im] : rep.matrices) {
    const auto nn = static_cast<std::size_t>(rep.n);
    if (re.rows() != nn || re.cols() != nn || im.rows() != nn || im.cols() != nn)
      throw std::invalid_argument("semidirect_realification: matrix shape mismatch");
    if (!re.trace().is_zero() || !im.trace().is_zero())
      throw std::invalid_argument("semidirect_realification: matrices must be traceless");
    real_forms.push_back(realify(re, im));
  }
  // Commuting family (representation of the abelian C^m).
  for (std::size_t a = 0; a < real_forms.size(); ++a)
    for (std::size_t b = a + 1; b < real_forms.size(); ++b)
      if (!commutator(real_forms[a], real_forms[b]).is_zero())
        throw std::invalid_argument("semidirect_realification: matrices must commute");

  const int dim = 2 * rep.m + 2 * rep.n;
  const Matrix I_block = standard_block_J(2 * rep.n);
  std::vector<StructureEntry> entries;
  for (int a = 1; a <= rep.m; ++a) {
    const Matrix& M = real_forms[a - 1];
    const Matrix IM = I_block * M;
    // [e_{2a-1}, X] = M X and [e_{2a}, X] = I M X for X in the R^{2n} factor,
    // so c_{2a-1, 2m+t}^{2m+s} = -M_st and c_{2a, 2m+t}^{2m+s} = -(IM)_st.
    for (int s = 1; s <= 2 * rep.n; ++s)
      for (int t = 1; t <= 2 * rep.n; ++t) {
        if (!M(s - 1, t - 1).is_zero())
          entries.push_back({2 * a - 1, 2 * rep.m + t, 2 * rep.m + s, -M(s - 1, t - 1)});
        if (!IM(s - 1, t - 1).is_zero())
          entries.push_back({2 * a, 2 * rep.m + t, 2 * rep.m + s, -IM(s - 1, t - 1)});
      }
  }
  return HermitianStructure::adapted(LieAlgebra(dim, entries));
}

Family8Result family8(const std::array<Rational, 22>& c) {
  // Structure equations of the generic family:
  //   de^5 = c12^5 b1 + c13^5 g13 + c14^5 g14        (coeffs 0..2)
  //   de^6 = c12^6 b1 + c13^6 g13 + c14^6 g14        (coeffs 3..5)
  //   de^7 = c12^7 b1 + (c12^7 + c34^7) b2 + c13^7 g13 + c14^7 g14
  //        + c15^7 g15 + c16^7 g16 + c35^7 g25 + c36^7 g26   (coeffs 6..13)
  //   de^8 = likewise                                          (coeffs 14..21)
  // with b1 = e12 - e34, b2 = e34 - e56, g13 = e13 + e24, g14 = e14 - e23,
  // g15 = e15 + e26, g16 = e16 - e25, g25 = e35 + e46, g26 = e36 - e45.
  const int dim = 8;
  KFormBuilder b1(dim, 2), b2(dim, 2), g13(dim, 2), g14(dim, 2), g15(dim, 2), g16(dim, 2),
      g25(dim, 2), g26(dim, 2);
  b1.add({1, 2}, Rational(1));
  b1.add({3, 4}, Rational(-1));
  b2.add({3, 4}, Rational(1));
  b2.add({5, 6}, Rational(-1));
  g13.add({1, 3}, Rational(1));
  g13.add({2, 4}, Rational(1));
  g14.add({1, 4}, Rational(1));
  g14.add({2, 3}, Rational(-1));
  g15.add({1, 5}, Rational(1));
  g15.add({2, 6}, Rational(1));
  g16.add({1, 6}, Rational(1));
  g16.add({2, 5}, Rational(-1));
  g25.add({3, 5}, Rational(1));
  g25.add({4, 6}, Rational(1));
  g26.add({3, 6}, Rational(1));
  g26.add({4, 5}, Rational(-1));
  const KForm B1 = b1.take(), B2 = b2.take(), G13 = g13.take(), G14 = g14.take(),
              G15 = g15.take(), G16 = g16.take(), G25 = g25.take(), G26 = g26.take();

  std::vector<KForm> d(9, KForm(dim, 2));
  d[5] = c[0] * B1 + c[1] * G13 + c[2] * G14;
  d[6] = c[3] * B1 + c[4] * G13 + c[5] * G14;
  d[7] = c[6] * B1 + (c[6] + c[7]) * B2 + c[8] * G13 + c[9] * G14 + c[10] * G15 + c[11] * G16 +
         c[12] * G25 + c[13] * G26;
  d[8] = c[14] * B1 + (c[14] + c[15]) * B2 + c[16] * G13 + c[17] * G14 + c[18] * G15 +
         c[19] * G16 + c[20] * G25 + c[21] * G26;

  std::vector<StructureEntry> entries;
  for (int k = 5; k <= 8; ++k)
    for (const auto& [t, coeff] : d[k].terms()) entries.push_back({t[0], t[1], k, coeff});

  Family8Result result{LieAlgebra(dim, entries, LieAlgebra::Mode::lax), false, {},
                       Family8Class::not_lie};
  result.defects = result.alg.jacobi_defect();
  result.jacobi_ok = result.defects.empty();
  if (!result.jacobi_ok) return result;

  if (result.alg.is_abelian_algebra()) {
    result.classification = Family8Class::abelian;
    return result;
  }
  const auto center_dim = result.alg.center().dim();
  if (center_dim == 4) {
    const Fingerprint fp = fingerprint(result.alg);
    static const std::array<Fingerprint, 3> reference = {
        fingerprint(named_structure("g1").alg()),
        fingerprint(named_structure("g2").alg()),
        fingerprint(named_structure("g3").alg())};
    if (fp == reference[0])
      result.classification = Family8Class::g1;
    else if (fp == reference[1])
      result.classification = Family8Class::g2;
    else if (fp == reference[2])
      result.classification = Family8Class::g3;
    else
      throw internal_error("family8: 4-dimensional centre with no matching reference algebra");
  } else if (center_dim == 2) {
    const bool d5_zero = d[5].is_zero(), d6_zero = d[6].is_zero();
    if (d5_zero && d6_zero) {
      result.classification = Family8Class::two_step_II1;
    } else {
      // Centre 2 forces de^5, de^6 either both zero or independent.
      RowSpace span(tuple_space_dim(dim, 2));
      span.insert(d[5].to_vector());
      span.insert(d[6].to_vector());
      if (span.dim() != 2)
        throw internal_error("family8: dependent nonzero de^5, de^6 with 2-dimensional centre");
      result.classification = Family8Class::three_step_II2;
    }
  } else {
    throw internal_error("family8: unexpected centre dimension");
  }
  return result;
}

std::string family8_class_name(Family8Class c) {
  switch (c) {
    case Family8Class::not_lie: return "not a Lie algebra";
    case Family8Class::abelian: return "abelian";
    case Family8Class::g1: return "center dim 4: g1";
    case Family8Class::g2: return "center dim 4: g2";
    case Family8Class::g3: return "center dim 4: g3";
    case Family8Class::two_step_II1: return "center dim 2: II.1 (2-step)";
    case Family8Class::three_step_II2: return "center dim 2: II.2 (3-step)";
  }
  return "?";
}

namespace {

LieAlgebra prop_I_algebra(int which) {
  // g1: de^6 = e12 - e34, de^7 = e13 + e24, de^8 = e14 - e23
  // g2: de^7 = e13 + e24, de^8 = e14 - e23
  // g3: de^8 = e12 - e34
  std::vector<StructureEntry> e;
  const Rational one(1), minus(-1);
  if (which == 1)
    e = {{1, 2, 6, one}, {3, 4, 6, minus}, {1, 3, 7, one}, {2, 4, 7, one},
         {1, 4, 8, one}, {2, 3, 8, minus}};
  else if (which == 2)
    e = {{1, 3, 7, one}, {2, 4, 7, one}, {1, 4, 8, one}, {2, 3, 8, minus}};
  else
    e = {{1, 2, 8, one}, {3, 4, 8, minus}};
  return LieAlgebra(8, e);
}

ComplexMatrixRep rep_diag_plus_minus() {
  Matrix re(2, 2), im(2, 2);
  re(0, 0) = Rational(1);
  re(1, 1) = Rational(-1);
  return ComplexMatrixRep{1, 2, {{re, im}}};
}

ComplexMatrixRep rep_complex_heisenberg() {
  Matrix re(2, 2), im(2, 2);
  re(1, 0) = Rational(1);
  return ComplexMatrixRep{1, 2, {{re, im}}};
}

ComplexMatrixRep rep_step3() {
  Matrix re(3, 3), im(3, 3);
  re(1, 0) = Rational(1);
  re(2, 1) = Rational(1);
  return ComplexMatrixRep{1, 3, {{re, im}}};
}

ComplexMatrixRep rep_M_lambda(const Rational& a, const Rational& b) {
  Matrix re(4, 4), im(4, 4);
  re(1, 0) = Rational(1);
  re(2, 2) = a;
  im(2, 2) = b;
  re(3, 3) = -a;
  im(3, 3) = -b;
  return ComplexMatrixRep{1, 4, {{re, im}}};
}

Rational param(const std::map<std::string, Rational>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("named_structure: missing parameter '" + key + "'");
  return it->second;
}

int int_param(const std::map<std::string, Rational>& params, const std::string& key) {
  const Rational v = param(params, key);
  if (v.denominator() != 1)
    throw std::invalid_argument("named_structure: parameter '" + key + "' must be an integer");
  return static_cast<int>(v.numerator().get_si());
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"g1", "8-dim nilpotent, center dim 4 (quaternionic Heisenberg x R)", {}, true, ""},
      {"g2", "8-dim nilpotent, center dim 4 (complex Heisenberg x R^2)", {}, true, ""},
      {"g3", "8-dim nilpotent, center dim 4 (h5 x R^3)", {}, true, ""},
      {"s6", "6-dim solvable non-nilpotent with holonomy su(3)", {}, false, ""},
      {"heisenberg", "h_{2n+1} x R^{2k+1} with the r-th balanced structure class",
       {"n", "k", "r"}, true, "requires n >= 2, 1 <= r <= floor(n/2)"},
      {"aff_A1", "aff(A1), isomorphic to h5 x R", {}, true,
       "products of A1 not listed in the reference are zero"},
      {"aff_B1", "aff(B1) = aff(A1) x R^2", {}, true, ""},
      {"aff_B2", "aff(B2)_lambda, isomorphic to h7 x R; scalar curvature -3 lambda^2",
       {"lambda"}, true, "lambda > 0 folded into the structure constants"},
      {"aff_B3", "aff(B3), isomorphic to g2", {}, true, ""},
      {"step3", "realification of the 3-step complex nilpotent algebra, dim 8", {}, true, ""},
      {"M_lambda", "10-dim indecomposable solvable family, holonomy inside su(4)",
       {"a", "b"}, false, "(a, b) != (0, 0)"},
      {"complex_heisenberg_realified", "realified complex Heisenberg algebra, dim 6", {}, true,
       "constructor frame; reference equations use a non-adapted frame, compare invariants only"},
  };
  return entries;
}

HermitianStructure named_structure(const std::string& name,
                                   const std::map<std::string, Rational>& params) {
  if (name == "g1") return HermitianStructure::adapted(prop_I_algebra(1));
  if (name == "g2") return HermitianStructure::adapted(prop_I_algebra(2));
  if (name == "g3") return HermitianStructure::adapted(prop_I_algebra(3));
  if (name == "s6") return semidirect_realification(rep_diag_plus_minus());
  if (name == "heisenberg")
    return heisenberg(int_param(params, "n"), int_param(params, "k"), int_param(params, "r"));
  if (name == "aff_A1") return aff(assoc_A1()).structure;
  if (name == "aff_B1") return aff(assoc_B1()).structure;
  if (name == "aff_B2") {
    const Rational lambda = param(params, "lambda");
    if (lambda.sign() <= 0)
      throw std::invalid_argument("named_structure: aff_B2 requires lambda > 0");
    return aff(assoc_B2(lambda)).structure;
  }
  if (name == "aff_B3") return aff(assoc_B3()).structure;
  if (name == "step3") return semidirect_realification(rep_step3());
  if (name == "M_lambda") {
    const Rational a = param(params, "a"), b = param(params, "b");
    if (a.is_zero() && b.is_zero())
      throw std::invalid_argument("named_structure: M_lambda requires (a, b) != (0, 0)");
    return semidirect_realification(rep_M_lambda(a, b));
  }
  if (name == "complex_heisenberg_realified")
    return semidirect_realification(rep_complex_heisenberg());
  throw std::invalid_argument("named_structure: unknown name '" + name + "'");
}

}  // namespace abh
