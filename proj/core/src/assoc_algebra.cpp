#include "abh/assoc_algebra.hpp"

#include <stdexcept>

namespace abh {

AssocAlgebra::AssocAlgebra(int dim, const std::vector<ProductEntry>& products) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("AssocAlgebra: dimension must be positive");
  for (const auto& p : products) {
    if (p.i < 1 || p.j < 1 || p.k < 1 || p.i > dim || p.j > dim || p.k > dim)
      throw std::invalid_argument("AssocAlgebra: product index out of range");
    auto key = std::minmax(p.i, p.j);
    auto [it, inserted] = products_.try_emplace({key.first, key.second}, Vec(dim));
    if (!it->second[p.k - 1].is_zero())
      throw std::invalid_argument("AssocAlgebra: duplicate product entry");
    it->second[p.k - 1] = p.c;
  }
}

Rational AssocAlgebra::product_constant(int i, int j, int k) const {
  return multiply_basis(i, j)[k - 1];
}

Vec AssocAlgebra::multiply_basis(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw std::invalid_argument("AssocAlgebra: index out of range");
  auto key = std::minmax(i, j);
  const auto it = products_.find({key.first, key.second});
  return it == products_.end() ? Vec(dim_) : it->second;
}

Vec AssocAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("AssocAlgebra: length mismatch");
  Vec r(dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (x[i - 1].is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (y[j - 1].is_zero()) continue;
      const Vec p = multiply_basis(i, j);
      const Rational f = x[i - 1] * y[j - 1];
      for (int k = 0; k < dim_; ++k) r[k] += f * p[k];
    }
  }
  return r;
}

bool AssocAlgebra::is_associative() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j)
      for (int k = 1; k <= dim_; ++k) {
        Vec ek(dim_), ei(dim_);
        ek[k - 1] = Rational(1);
        ei[i - 1] = Rational(1);
        const Vec lhs = multiply(multiply_basis(i, j), ek);
        const Vec rhs = multiply(ei, multiply_basis(j, k));
        if (!is_zero(lhs - rhs)) return false;
      }
  return true;
}

bool AssocAlgebra::is_nilpotent() const {
  // A^{s+1} = span{x y : x in A, y in A^s}; nilpotent iff some power is 0.
  Subspace power = Subspace::whole(dim_);
  for (int step = 0; step <= dim_ + 1; ++step) {
    if (power.dim() == 0) return true;
    std::vector<Vec> gens;
    for (int i = 1; i <= dim_; ++i) {
      Vec ei(dim_);
      ei[i - 1] = Rational(1);
      for (const Vec& y : power.basis()) gens.push_back(multiply(ei, y));
    }
    const Subspace next = Subspace::span(dim_, gens);
    if (next == power) return false;  // stabilised above zero
    power = next;
  }
  return power.dim() == 0;
}

Subspace AssocAlgebra::annihilator() const {
  Matrix system(static_cast<std::size_t>(dim_) * dim_, dim_);
  for (int j = 1; j <= dim_; ++j)
    for (int i = 1; i <= dim_; ++i) {
      const Vec p = multiply_basis(i, j);
      for (int k = 0; k < dim_; ++k)
        system(static_cast<std::size_t>(j - 1) * dim_ + k, i - 1) = p[k];
    }
  return Subspace::kernel_of(system);
}

Vec AssocAlgebra::sum_of_squares() const {
  Vec s(dim_);
  for (int i = 1; i <= dim_; ++i) s = s + multiply_basis(i, i);
  return s;
}

AssocChecks assoc_checks(const AssocAlgebra& a) {
  return AssocChecks{true, a.is_associative(), a.is_nilpotent()};
}

AssocAlgebra assoc_A1() {
  // e1^2 = -e3, e2^2 = e3; unlisted products are zero.
  return AssocAlgebra(3, {{1, 1, 3, Rational(-1)}, {2, 2, 3, Rational(1)}});
}

AssocAlgebra assoc_B1() {
  // A1 x R.
  return AssocAlgebra(4, {{1, 1, 3, Rational(-1)}, {2, 2, 3, Rational(1)}});
}

AssocAlgebra assoc_B2(const Rational& lambda) {
  if (lambda.sign() <= 0) throw std::invalid_argument("assoc_B2: lambda must be positive");
  return AssocAlgebra(4, {{1, 1, 4, lambda}, {2, 2, 4, lambda}, {3, 3, 4, Rational(-2) * lambda}});
}

AssocAlgebra assoc_B3() {
  // e1^2 = -e3, e2^2 = e3, e1 e2 = e4.
  return AssocAlgebra(4, {{1, 1, 3, Rational(-1)},
                          {2, 2, 3, Rational(1)},
                          {1, 2, 4, Rational(1)}});
}

}  // namespace abh
