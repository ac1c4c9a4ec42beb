#pragma once

// Deterministic random generators and independent oracles shared by the
// test suites. Everything here is test-only and stays independent of the
// implementation paths it cross-checks.

#include <random>
#include <vector>

#include "abh/kform.hpp"
#include "abh/lie_algebra.hpp"

namespace abh::testing {

using Rng = std::mt19937;

inline Rational random_rational(Rng& rng, int max_abs_num = 4, int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Vec random_vector(Rng& rng, int dim) {
  Vec v(dim);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

inline KForm random_form(Rng& rng, int dim, int degree, int terms = 4) {
  KFormBuilder b(dim, degree);
  std::uniform_int_distribution<int> pick(1, dim);
  for (int t = 0; t < terms; ++t) {
    IndexTuple idx(degree);
    for (int& i : idx) i = pick(rng);
    b.add(idx, random_rational(rng));
  }
  return b.take();
}

/// Sparse random structure constants; most draws violate Jacobi, which is
/// exactly what the d^2 = 0 equivalence tests need.
inline LieAlgebra random_structure(Rng& rng, int dim, int entries = 4) {
  std::uniform_int_distribution<int> pick(1, dim);
  std::vector<StructureEntry> list;
  for (int t = 0; t < entries; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const int k = pick(rng);
    bool duplicate = false;
    for (const auto& e : list)
      if (e.i == i && e.j == j && e.k == k) duplicate = true;
    if (!duplicate) list.push_back({i, j, k, random_rational(rng)});
  }
  return LieAlgebra(dim, list, LieAlgebra::Mode::lax);
}

/// Brute-force shuffle expansion of (a ^ b)(v_1, ..., v_{p+q}).
inline Rational wedge_eval_oracle(const KForm& a, const KForm& b,
                                  const std::vector<Vec>& vectors) {
  const int p = a.degree(), q = b.degree();
  const int total = p + q;
  std::vector<int> choose(p);
  for (int i = 0; i < p; ++i) choose[i] = i;
  Rational sum;
  while (true) {
    std::vector<bool> taken(total, false);
    for (int c : choose) taken[c] = true;
    std::vector<Vec> left, right;
    std::vector<int> perm;
    for (int c : choose) {
      left.push_back(vectors[c]);
      perm.push_back(c);
    }
    for (int i = 0; i < total; ++i)
      if (!taken[i]) {
        right.push_back(vectors[i]);
        perm.push_back(i);
      }
    int sign = 1;  // parity of the shuffle permutation
    for (std::size_t x = 0; x < perm.size(); ++x)
      for (std::size_t y = x + 1; y < perm.size(); ++y)
        if (perm[x] > perm[y]) sign = -sign;
    sum += Rational(sign) * eval(a, left) * eval(b, right);
    // next p-combination of {0..total-1}
    int pos = p - 1;
    while (pos >= 0 && choose[pos] == total - (p - pos)) --pos;
    if (pos < 0) break;
    ++choose[pos];
    for (int i = pos + 1; i < p; ++i) choose[i] = choose[i - 1] + 1;
  }
  return sum;
}

/// Direct triple-loop Jacobi sum [[x,y],z] + [[y,z],x] + [[z,x],y] over all
/// basis triples.
inline bool jacobi_sum_vanishes(const LieAlgebra& alg) {
  const int m = alg.dim();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) {
        Vec x(m), y(m), z(m);
        x[i - 1] = Rational(1);
        y[j - 1] = Rational(1);
        z[k - 1] = Rational(1);
        const Vec s = alg.bracket(alg.bracket(x, y), z) + alg.bracket(alg.bracket(y, z), x) +
                      alg.bracket(alg.bracket(z, x), y);
        if (!is_zero(s)) return false;
      }
  return true;
}

/// Koszul-style differential on k-forms evaluated directly on basis tuples,
/// (d a)(x_0..x_k) = sum_{r<s} (-1)^{r+s} a([x_r, x_s], ..., hat r, hat s, ...).
inline KForm differential_oracle(const KForm& a, const LieAlgebra& alg) {
  const int m = alg.dim();
  const int k = a.degree();
  KFormBuilder out(m, k + 1);
  if (k + 1 > m) return out.take();
  IndexTuple t(k + 1);
  for (int i = 0; i <= k; ++i) t[i] = i + 1;
  while (true) {
    Rational value;
    for (int r = 0; r <= k; ++r)
      for (int s = r + 1; s <= k; ++s) {
        std::vector<Vec> args;
        args.push_back(alg.bracket_basis(t[r], t[s]));
        for (int x = 0; x <= k; ++x) {
          if (x == r || x == s) continue;
          Vec e(m);
          e[t[x] - 1] = Rational(1);
          args.push_back(e);
        }
        const int sign = ((r + s) % 2 == 0) ? 1 : -1;  // (-1)^{r+s}, 0-based r,s
        value += Rational(sign) * eval(a, args);
      }
    if (!value.is_zero()) out.add(t, value);
    int pos = k;
    while (pos >= 0 && t[pos] == m - (k - pos)) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int i = pos + 1; i <= k; ++i) t[i] = t[i - 1] + 1;
  }
  return out.take();
}

}  // namespace abh::testing
