#include "abh/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace abh {

LieAlgebra::LieAlgebra(int dim, const std::vector<StructureEntry>& structure, Mode mode)
    : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("LieAlgebra: dimension must be positive");
  for (const auto& e : structure) {
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim || e.k > dim)
      throw std::invalid_argument("LieAlgebra: structure index out of range");
    if (e.i >= e.j)
      throw std::invalid_argument("LieAlgebra: structure entries require i < j");
    if (e.c.is_zero()) continue;
    auto [it, inserted] = c_.emplace(std::array<int, 3>{e.i, e.j, e.k}, e.c);
    if (!inserted) throw std::invalid_argument("LieAlgebra: duplicate (i,j,k) entry");
  }
  if (mode == Mode::strict) {
    const auto defects = jacobi_defect();
    if (!defects.empty()) {
      std::ostringstream os;
      os << "LieAlgebra: Jacobi identity fails, d(de^" << defects.front().first
         << ") = " << defects.front().second;
      throw std::invalid_argument(os.str());
    }
  }
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim, {}); }

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw std::invalid_argument("structure_constant: index out of range");
  if (i == j) return Rational(0);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = c_.find({i, j, k});
  if (it == c_.end()) return Rational(0);
  return flip ? -it->second : it->second;
}

KForm LieAlgebra::d_basis_one_form(int k) const {
  KFormBuilder b(dim_, 2);
  for (const auto& [key, c] : c_)
    if (key[2] == k) b.add({key[0], key[1]}, c);
  return b.take();
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec r(dim_);
  for (int k = 1; k <= dim_; ++k) r[k - 1] = -structure_constant(i, j, k);
  return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: length mismatch");
  Vec r(dim_);
  for (const auto& [key, c] : c_) {
    const auto [i, j, k] = key;
    // [e_i, e_j] contributes -c e_k; bilinear extension with antisymmetry.
    const Rational factor = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
    if (!factor.is_zero()) r[k - 1] -= c * factor;
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("ad: length mismatch");
  Matrix m(dim_, dim_);
  for (int j = 1; j <= dim_; ++j) {
    Vec ej(dim_);
    ej[j - 1] = Rational(1);
    const Vec col = bracket(x, ej);
    for (int i = 1; i <= dim_; ++i) m(i - 1, j - 1) = col[i - 1];
  }
  return m;
}

std::vector<std::pair<int, KForm>> LieAlgebra::jacobi_defect() const {
  std::vector<std::pair<int, KForm>> defects;
  for (int k = 1; k <= dim_; ++k) {
    const KForm dk = d_basis_one_form(k);
    if (dk.is_zero()) continue;
    const KForm dd = differential(dk, *this);
    if (!dd.is_zero()) defects.emplace_back(k, dd);
  }
  return defects;
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 1; i <= dim_; ++i) {
    Vec ei(dim_);
    ei[i - 1] = Rational(1);
    if (!ad(ei).trace().is_zero()) return false;
  }
  return true;
}

Subspace LieAlgebra::center() const {
  // Stack the maps x -> [x, e_j] for all j into one (dim*dim) x dim matrix;
  // the center is its kernel.
  Matrix m(static_cast<std::size_t>(dim_) * dim_, dim_);
  for (int col = 1; col <= dim_; ++col) {
    Vec x(dim_);
    x[col - 1] = Rational(1);
    for (int j = 1; j <= dim_; ++j) {
      Vec ej(dim_);
      ej[j - 1] = Rational(1);
      const Vec br = bracket(x, ej);
      for (int i = 0; i < dim_; ++i)
        m(static_cast<std::size_t>(j - 1) * dim_ + i, col - 1) = br[i];
    }
  }
  return Subspace::kernel_of(m);
}

namespace {

Subspace bracket_span(const LieAlgebra& alg, const Subspace& u, const Subspace& v) {
  std::vector<Vec> gens;
  for (const Vec& x : u.basis())
    for (const Vec& y : v.basis()) gens.push_back(alg.bracket(x, y));
  return Subspace::span(alg.dim(), gens);
}

}  // namespace

SeriesInfo LieAlgebra::series() const {
  const Subspace whole = Subspace::whole(dim_);
  const Subspace derived = bracket_span(*this, whole, whole);

  // Lower central series: g^1 = g, g^{s+1} = [g, g^s].
  std::optional<int> nilpotency;
  Subspace lcs = whole;
  for (int step = 1; step <= dim_ + 1; ++step) {
    if (lcs.dim() == 0) {
      nilpotency = step - 1;
      break;
    }
    const Subspace next = bracket_span(*this, whole, lcs);
    if (next == lcs) break;  // stabilised above zero
    lcs = next;
  }

  // Derived series: g^(0) = g, g^(s+1) = [g^(s), g^(s)].
  std::optional<int> solvability;
  Subspace ds = whole;
  for (int step = 0; step <= dim_ + 1; ++step) {
    if (ds.dim() == 0) {
      solvability = step;
      break;
    }
    const Subspace next = bracket_span(*this, ds, ds);
    if (next == ds) break;
    ds = next;
  }

  return SeriesInfo{nilpotency, solvability, derived};
}

int LieAlgebra::betti_1() const { return dim_ - static_cast<int>(d_rank(1)); }

std::size_t LieAlgebra::d_rank(int degree) const {
  if (degree < 1 || degree > dim_) throw std::invalid_argument("d_rank: bad degree");
  const std::size_t domain = tuple_space_dim(dim_, degree);
  const std::size_t target = tuple_space_dim(dim_, degree + 1);
  if (target == 0) return 0;
  RowSpace image(target);
  IndexTuple t(degree);
  for (int i = 0; i < degree; ++i) t[i] = i + 1;
  std::size_t count = 0;
  while (count < domain) {
    const KForm dk = differential(KForm::basis(dim_, t), *this);
    if (!dk.is_zero()) image.insert(dk.to_vector());
    ++count;
    int p = degree - 1;
    while (p >= 0 && t[p] == dim_ - (degree - 1 - p)) --p;
    if (p < 0) break;
    ++t[p];
    for (int i = p + 1; i < degree; ++i) t[i] = t[i - 1] + 1;
  }
  return image.dim();
}

LieAlgebra LieAlgebra::change_basis(const Matrix& P) const {
  const auto n = static_cast<std::size_t>(dim_);
  if (P.rows() != n || P.cols() != n)
    throw std::invalid_argument("change_basis: shape mismatch");
  // Solve P * X = I to express old coordinates in the new frame.
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = P(i, j);
    aug(i, n + i) = Rational(1);
  }
  if (rref(aug) != n) throw std::invalid_argument("change_basis: singular matrix");
  Matrix Pinv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Pinv(i, j) = aug(i, n + j);

  std::vector<StructureEntry> entries;
  for (int a = 1; a <= dim_; ++a)
    for (int b = a + 1; b <= dim_; ++b) {
      const Vec br = bracket(P.col(a - 1), P.col(b - 1));
      const Vec in_new = Pinv.apply(br);
      for (int k = 1; k <= dim_; ++k)
        if (!in_new[k - 1].is_zero())
          entries.push_back({a, b, k, -in_new[k - 1]});
    }
  return LieAlgebra(dim_, entries, Mode::lax);
}

KForm differential(const KForm& a, const LieAlgebra& alg) {
  if (a.ambient_dim() != alg.dim())
    throw std::invalid_argument("differential: dimension mismatch");
  const int k = a.degree();
  KForm result(alg.dim(), k + 1);
  if (k == 0) return result;  // d vanishes on constants
  for (const auto& [t, c] : a.terms()) {
    // d(e^{i1...ik}) = sum_l (-1)^(l-1) e^{i1} ^ ... ^ de^{i_l} ^ ... ^ e^{ik}.
    // de^{i_l} has even degree, so pulling it to the front of the word is
    // free and only the Leibniz sign remains.
    for (int l = 0; l < k; ++l) {
      const KForm d_il = alg.d_basis_one_form(t[l]);
      if (d_il.is_zero()) continue;
      KForm piece = d_il;
      for (int m = 0; m < k; ++m) {
        if (m == l) continue;
        piece = wedge(piece, KForm::basis(alg.dim(), {t[m]}));
      }
      const int sign = (l % 2 == 0) ? 1 : -1;
      result = result + Rational(sign) * c * piece;
    }
  }
  return result;
}

Fingerprint fingerprint(const LieAlgebra& alg) {
  Fingerprint f;
  f.dim = alg.dim();
  f.betti_1 = alg.betti_1();
  f.center_dim = static_cast<int>(alg.center().dim());
  const SeriesInfo s = alg.series();
  f.derived_dim = static_cast<int>(s.derived_algebra.dim());
  f.nilpotency_step = s.nilpotency_step;
  f.solvability_step = s.solvability_step;
  for (int deg = 1; deg < alg.dim(); ++deg) f.d_ranks.push_back(alg.d_rank(deg));
  return f;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " b1=" << betti_1 << " center=" << center_dim
     << " derived=" << derived_dim << " nilstep=";
  if (nilpotency_step)
    os << *nilpotency_step;
  else
    os << "-";
  os << " solvstep=";
  if (solvability_step)
    os << *solvability_step;
  else
    os << "-";
  os << " dranks=[";
  for (std::size_t i = 0; i < d_ranks.size(); ++i) os << (i ? "," : "") << d_ranks[i];
  os << "]";
  return os.str();
}

}  // namespace abh
