#pragma once

#include <map>
#include <utility>
#include <vector>

#include "abh/linalg.hpp"
#include "abh/rational.hpp"

namespace abh {

/// Commutative algebra given by products of basis elements,
/// e_i e_j = sum_k a_ij^k e_k with a_ij^k = a_ji^k forced by storage.
/// Associativity and nilpotency are checkable predicates, not invariants.
class AssocAlgebra {
public:
  struct ProductEntry {
    int i, j, k;
    Rational c;
  };

  AssocAlgebra(int dim, const std::vector<ProductEntry>& products);

  int dim() const { return dim_; }
  Rational product_constant(int i, int j, int k) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec multiply_basis(int i, int j) const;

  bool is_associative() const;
  bool is_nilpotent() const;
  /// Annihilator {x : x y = 0 for all y}.
  Subspace annihilator() const;

  /// sum_i e_i^2, the balanced obstruction for aff().
  Vec sum_of_squares() const;

private:
  int dim_;
  std::map<std::pair<int, int>, Vec> products_;  // key (i <= j) -> e_i e_j
};

struct AssocChecks {
  bool commutative;  // true by construction
  bool associative;
  bool nilpotent;
};
AssocChecks assoc_checks(const AssocAlgebra& a);

/// The named algebras used by the aff construction. B2 takes the scale
/// folded into the products: e1^2 = e2^2 = lambda e4, e3^2 = -2 lambda e4.
AssocAlgebra assoc_A1();
AssocAlgebra assoc_B1();
AssocAlgebra assoc_B2(const Rational& lambda);
AssocAlgebra assoc_B3();

}  // namespace abh
