#pragma once

#include <optional>
#include <vector>

#include "abh/connection.hpp"
#include "abh/hermitian.hpp"

namespace abh {

/// Ambrose-Singer closure for the Bismut connection in the invariant
/// setting: the holonomy algebra is spanned by the curvature endomorphisms
/// and their iterated covariant derivatives.
struct HolonomyReport {
  std::vector<KForm> basis;  // echelon-canonical 2-forms, original frame
  int dim = 0;
  int iterations = 0;

  bool spans_in_gamma = false;       // every basis element satisfies the Gamma conditions
  std::optional<int> minimal_q;      // smallest q with basis in Gamma_q (center-last frame)
  std::vector<int> pair_order;       // adapted-pair filtration used for minimal_q

  int center_dim = 0;
  bool unimodular = false;
  bool complex_ok = false;
  bool abelian = false;
  std::optional<bool> balanced;      // empty when not unimodular

  /// The reduction statement hol <= su(n - k) applies when the structure is
  /// unimodular, abelian, balanced and dim center = 2k.
  bool theorem_applicable = false;
  std::optional<int> theorem_bound;  // n - k
  std::optional<bool> theorem_holds;
};

HolonomyReport holonomy_algebra(const HermitianStructure& h);

/// {eta : nabla eta = 0} computed from the Bismut 1-forms. Requires abelian
/// J; the result provably equals the g-dual of the center, which is asserted.
Subspace parallel_one_forms(const HermitianStructure& h);

}  // namespace abh
