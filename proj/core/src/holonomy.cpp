#include "abh/holonomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "abh/errors.hpp"
#include "abh/gamma.hpp"

namespace abh {

namespace {

// eta(z, e_b) for all b; zero interior product means eta has no component
// along the direction z.
bool interior_product_vanishes(const KForm& eta, const Vec& z) {
  const int m = eta.ambient_dim();
  for (int b = 1; b <= m; ++b) {
    Vec eb(m);
    eb[b - 1] = Rational(1);
    if (!eval(eta, {z, eb}).is_zero()) return false;
  }
  return true;
}

// Pairs (e_{2t-1}, e_{2t}) entirely inside the center, when those account
// for the whole center; empty optional otherwise.
std::optional<std::vector<bool>> center_pair_split(const Subspace& center, int n) {
  std::vector<bool> in_center(n + 1, false);
  std::size_t covered = 0;
  for (int t = 1; t <= n; ++t) {
    Vec a(2 * n), b(2 * n);
    a[2 * t - 2] = Rational(1);
    b[2 * t - 1] = Rational(1);
    if (center.contains(a) && center.contains(b)) {
      in_center[t] = true;
      covered += 2;
    }
  }
  if (covered != center.dim()) return std::nullopt;
  return in_center;
}

}  // namespace

HolonomyReport holonomy_algebra(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  const int m = h.dim();
  const int n = h.n();

  HolonomyReport report;
  report.unimodular = alg.is_unimodular();
  report.complex_ok = is_complex_structure(alg, h.J());
  report.abelian = is_abelian(alg, h.J());
  if (report.unimodular) report.balanced = is_balanced(h);

  const Subspace center = alg.center();
  report.center_dim = static_cast<int>(center.dim());

  const ConnectionForms sigma = bismut_forms(h);
  const CurvatureForms omega = curvature_forms(sigma, alg);

  RowSpace span(tuple_space_dim(m, 2));
  std::vector<KForm> frontier;
  for (const CurvatureEndomorphism& r : curvature_endomorphisms(omega))
    if (span.insert(r.form.to_vector())) frontier.push_back(r.form);

  const int cap = static_cast<int>(tuple_space_dim(m, 2)) + 1;
  while (!frontier.empty()) {
    ++report.iterations;
    if (report.iterations > cap)
      throw internal_error("holonomy_algebra: closure failed to stabilise");
    std::vector<KForm> next;
    for (const KForm& v : frontier)
      for (int j = 1; j <= m; ++j) {
        KForm w = covariant_derivative_2form(sigma, j, v);
        if (!w.is_zero() && span.insert(w.to_vector())) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }

  report.dim = static_cast<int>(span.dim());
  for (const Vec& row : span.rows())
    report.basis.push_back(KForm::from_vector(m, 2, row));

  report.spans_in_gamma =
      std::all_of(report.basis.begin(), report.basis.end(),
                  [&](const KForm& eta) { return satisfies_gamma_conditions(eta, h); });

  // Gamma_q filtration in a center-last pair order when the center is a
  // union of adapted pairs; identity order otherwise.
  std::vector<int> order;
  if (const auto split = center_pair_split(center, n)) {
    for (int t = 1; t <= n; ++t)
      if (!(*split)[t]) order.push_back(t);
    for (int t = 1; t <= n; ++t)
      if ((*split)[t]) order.push_back(t);
  } else {
    for (int t = 1; t <= n; ++t) order.push_back(t);
  }
  report.pair_order = order;

  if (report.spans_in_gamma) {
    std::vector<int> new_pair_of(n + 1);
    for (int pos = 0; pos < n; ++pos) new_pair_of[order[pos]] = pos + 1;
    int q = 0;
    for (const KForm& eta : report.basis)
      for (const auto& [t, c] : eta.terms())
        for (int idx : t) q = std::max(q, new_pair_of[(idx + 1) / 2]);
    report.minimal_q = q;
  }

  report.theorem_applicable = report.unimodular && report.complex_ok && report.abelian &&
                              report.balanced.value_or(false) && report.center_dim % 2 == 0;
  if (report.theorem_applicable) {
    report.theorem_bound = n - report.center_dim / 2;
    bool holds = report.spans_in_gamma;
    for (const Vec& z : center.basis())
      for (const KForm& eta : report.basis)
        if (holds && !interior_product_vanishes(eta, z)) holds = false;
    report.theorem_holds = holds;
  }
  return report;
}

Subspace parallel_one_forms(const HermitianStructure& h) {
  const LieAlgebra& alg = h.alg();
  if (!is_abelian(alg, h.J()))
    throw std::invalid_argument("parallel_one_forms: requires an abelian complex structure");
  const int m = h.dim();
  const ConnectionForms sigma = bismut_forms(h);
  // nabla_{e_a} eta = 0 for all a: sum_i sigma^i_j(e_a) eta_i = 0 for all (j, a).
  Matrix system(static_cast<std::size_t>(m) * m, m);
  for (int j = 1; j <= m; ++j)
    for (int a = 1; a <= m; ++a) {
      Vec ea(m);
      ea[a - 1] = Rational(1);
      for (int i = 1; i <= m; ++i)
        system(static_cast<std::size_t>(j - 1) * m + (a - 1), i - 1) =
            eval(sigma.sigma(i, j), {ea});
    }
  const Subspace parallel = Subspace::kernel_of(system);
  if (!(parallel == alg.center()))
    throw internal_error("parallel_one_forms: space differs from the dual of the center");
  return parallel;
}

}  // namespace abh
