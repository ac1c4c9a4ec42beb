#include "abh/kform.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace abh {

namespace {

// Sorts the tuple, returning the permutation sign, or 0 on repeated index.
int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

void check_tuple_range(const IndexTuple& t, int dim) {
  for (int idx : t)
    if (idx < 1 || idx > dim) throw std::invalid_argument("KForm: index out of range");
}

}  // namespace

KForm::KForm(int ambient_dim, int degree) : ambient_dim_(ambient_dim), degree_(degree) {
  if (ambient_dim < 1) throw std::invalid_argument("KForm: ambient dimension must be positive");
  if (degree < 0) throw std::invalid_argument("KForm: negative degree");
}

KForm KForm::basis(int ambient_dim, std::initializer_list<int> indices) {
  return basis(ambient_dim, IndexTuple(indices));
}

KForm KForm::basis(int ambient_dim, IndexTuple indices, Rational coeff) {
  KForm f(ambient_dim, static_cast<int>(indices.size()));
  check_tuple_range(indices, ambient_dim);
  const int sign = sort_with_sign(indices);
  if (sign != 0) f.add_term(indices, Rational(sign) * coeff);
  return f;
}

KForm KForm::constant(int ambient_dim, Rational value) {
  KForm f(ambient_dim, 0);
  f.add_term({}, value);
  return f;
}

Rational KForm::coefficient(const IndexTuple& indices) const {
  IndexTuple t = indices;
  check_tuple_range(t, ambient_dim_);
  if (static_cast<int>(t.size()) != degree_)
    throw std::invalid_argument("KForm: tuple length does not match degree");
  const int sign = sort_with_sign(t);
  if (sign == 0) return Rational(0);
  const auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rational(0) : Rational(sign) * it->second;
}

void KForm::add_term(const IndexTuple& indices, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(indices, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm r(ambient_dim_, degree_);
  for (const auto& [t, c] : coeffs_) r.coeffs_.emplace(t, -c);
  return r;
}

KForm operator+(const KForm& a, const KForm& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.degree() != b.degree())
    throw std::invalid_argument("KForm sum: shape mismatch");
  KForm r = a;
  for (const auto& [t, c] : b.coeffs_) r.add_term(t, c);
  return r;
}

KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

KForm operator*(const Rational& c, const KForm& a) {
  KForm r(a.ambient_dim(), a.degree());
  if (c.is_zero()) return r;
  for (const auto& [t, v] : a.coeffs_) r.coeffs_.emplace(t, c * v);
  return r;
}

void KFormBuilder::add(IndexTuple indices, Rational c) {
  check_tuple_range(indices, form_.ambient_dim());
  if (static_cast<int>(indices.size()) != form_.degree())
    throw std::invalid_argument("KFormBuilder: tuple length does not match degree");
  const int sign = sort_with_sign(indices);
  if (sign != 0) form_.add_term(indices, Rational(sign) * c);
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("wedge: ambient dimension mismatch");
  KForm r(a.ambient_dim(), a.degree() + b.degree());
  for (const auto& [ta, ca] : a.coeffs_)
    for (const auto& [tb, cb] : b.coeffs_) {
      IndexTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      const int sign = sort_with_sign(t);
      if (sign != 0) r.add_term(t, Rational(sign) * ca * cb);
    }
  return r;
}

KForm wedge_power(const KForm& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("wedge_power: negative exponent");
  KForm r = KForm::constant(a.ambient_dim(), Rational(1));
  for (int i = 0; i < exponent; ++i) r = wedge(r, a);
  return r;
}

Rational eval(const KForm& a, const std::vector<Vec>& vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    throw std::invalid_argument("eval: arity mismatch");
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != a.ambient_dim())
      throw std::invalid_argument("eval: vector length mismatch");
  const int k = a.degree();
  Rational total;
  for (const auto& [t, c] : a.terms()) {
    // det of the k x k matrix with entries vectors[col][t[row] - 1]
    Matrix m(k, k);
    for (int row = 0; row < k; ++row)
      for (int col = 0; col < k; ++col) m(row, col) = vectors[col][t[row] - 1];
    // Laplace-free determinant via elimination would be overkill at this
    // size; use Gaussian elimination on a copy.
    Rational det(1);
    bool singular = false;
    for (int piv = 0; piv < k && !singular; ++piv) {
      int sel = piv;
      while (sel < k && m(sel, piv).is_zero()) ++sel;
      if (sel == k) {
        singular = true;
        break;
      }
      if (sel != piv) {
        for (int j = 0; j < k; ++j) std::swap(m(sel, j), m(piv, j));
        det = -det;
      }
      det *= m(piv, piv);
      const Rational inv = Rational(1) / m(piv, piv);
      for (int i = piv + 1; i < k; ++i) {
        const Rational f = m(i, piv) * inv;
        if (f.is_zero()) continue;
        for (int j = piv; j < k; ++j) m(i, j) -= f * m(piv, j);
      }
    }
    if (!singular) total += c * det;
  }
  return total;
}

KForm apply_J(const KForm& a, const Matrix& J) {
  const auto n = static_cast<std::size_t>(a.ambient_dim());
  if (J.rows() != n || J.cols() != n) throw std::invalid_argument("apply_J: shape mismatch");
  const int k = a.degree();
  if (k == 0) return a;
  const Rational sign((k % 2 == 0) ? 1 : -1);
  KFormBuilder out(a.ambient_dim(), k);

  // Signed-permutation fast path (covers the adapted structure): the
  // pullback maps each monomial to a signed monomial, J* e^i = J_ic e^c.
  std::vector<int> perm_col(n, 0);
  std::vector<Rational> perm_val(n);
  bool is_signed_perm = true;
  for (std::size_t i = 0; i < n && is_signed_perm; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (J(i, j).is_zero()) continue;
      ++nonzero;
      perm_col[i] = static_cast<int>(j) + 1;
      perm_val[i] = J(i, j);
    }
    if (nonzero != 1) is_signed_perm = false;
  }
  if (is_signed_perm) {
    for (const auto& [t, c] : a.terms()) {
      IndexTuple mapped(k);
      Rational factor = sign * c;
      for (int i = 0; i < k; ++i) {
        mapped[i] = perm_col[t[i] - 1];
        factor *= perm_val[t[i] - 1];
      }
      out.add(std::move(mapped), factor);
    }
    return out.take();
  }

  // General path: (J a)(e_{j1},...,e_{jk}) = (-1)^k a(J e_{j1},..., J e_{jk}),
  // the J e_j being the columns of J.
  std::vector<Vec> jcols(n);
  for (std::size_t j = 0; j < n; ++j) jcols[j] = J.col(j);
  IndexTuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  while (true) {
    std::vector<Vec> args(k);
    for (int i = 0; i < k; ++i) args[i] = jcols[t[i] - 1];
    Rational v = eval(a, args);
    if (!v.is_zero()) out.add(t, sign * v);
    int pos = k - 1;
    while (pos >= 0 && t[pos] == a.ambient_dim() - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int i = pos + 1; i < k; ++i) t[i] = t[i - 1] + 1;
  }
  return out.take();
}

std::size_t tuple_space_dim(int ambient_dim, int degree) {
  // C(ambient_dim, degree)
  if (degree < 0 || degree > ambient_dim) return 0;
  std::size_t r = 1;
  for (int i = 0; i < degree; ++i) r = r * (ambient_dim - i) / (i + 1);
  return r;
}

Vec KForm::to_vector() const {
  Vec v(tuple_space_dim(ambient_dim_, degree_));
  IndexTuple t(degree_);
  for (int i = 0; i < degree_; ++i) t[i] = i + 1;
  std::size_t pos = 0;
  if (degree_ == 0) {
    if (!coeffs_.empty()) v[0] = coeffs_.begin()->second;
    return v;
  }
  while (true) {
    const auto it = coeffs_.find(t);
    if (it != coeffs_.end()) v[pos] = it->second;
    ++pos;
    int p = degree_ - 1;
    while (p >= 0 && t[p] == ambient_dim_ - (degree_ - 1 - p)) --p;
    if (p < 0) break;
    ++t[p];
    for (int i = p + 1; i < degree_; ++i) t[i] = t[i - 1] + 1;
  }
  return v;
}

KForm KForm::from_vector(int ambient_dim, int degree, const Vec& v) {
  if (v.size() != tuple_space_dim(ambient_dim, degree))
    throw std::invalid_argument("KForm::from_vector: length mismatch");
  KForm f(ambient_dim, degree);
  if (degree == 0) {
    if (!v[0].is_zero()) f.add_term({}, v[0]);
    return f;
  }
  IndexTuple t(degree);
  for (int i = 0; i < degree; ++i) t[i] = i + 1;
  std::size_t pos = 0;
  while (true) {
    if (!v[pos].is_zero()) f.add_term(t, v[pos]);
    ++pos;
    int p = degree - 1;
    while (p >= 0 && t[p] == ambient_dim - (degree - 1 - p)) --p;
    if (p < 0) break;
    ++t[p];
    for (int i = p + 1; i < degree; ++i) t[i] = t[i - 1] + 1;
  }
  return f;
}

std::string KForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : coeffs_) {
    if (t.empty()) {  // degree 0
      os << c.str();
      first = false;
      continue;
    }
    std::string mono = "e";
    bool wide = ambient_dim_ > 9;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i > 0 && wide) mono += ",";
      mono += std::to_string(t[i]);
    }
    if (first) {
      if (c == Rational(1))
        os << mono;
      else if (c == Rational(-1))
        os << "-" << mono;
      else
        os << c.str() << " " << mono;
      first = false;
    } else {
      if (c == Rational(1))
        os << " + " << mono;
      else if (c == Rational(-1))
        os << " - " << mono;
      else if (c.sign() > 0)
        os << " + " << c.str() << " " << mono;
      else
        os << " - " << (-c).str() << " " << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const KForm& f) { return os << f.str(); }

}  // namespace abh
