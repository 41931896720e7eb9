#include "degenlab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace degenlab {

Vector mat_vec(const QMatrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("matrix-vector shapes");
  Vector r(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0 && sgn(m(i, j)) != 0) r[i] += m(i, j) * v[j];
  return r;
}

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer x = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

namespace {

// Gauss-Jordan over a field; returns pivot columns and leaves m in RREF.
template <class T>
std::vector<std::size_t> field_rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1L) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
Matrix<T> field_invert(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1L);
  }
  auto piv = field_rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Singular("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace

std::size_t rank(const RfMatrix& m) {
  RfMatrix c = m;
  return field_rref(c).size();
}

std::vector<std::size_t> rref(QMatrix& m) { return field_rref(m); }

QMatrix invert(const QMatrix& m) { return field_invert(m); }
RfMatrix invert(const RfMatrix& m) { return field_invert(m); }

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// ----------------------------------------------------------------- Partition

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::label() const {
  Partition p;
  for (int x : parts)
    if (x > 1) p.parts.push_back(x);
  return p;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition partition_from_ranks(const std::vector<std::size_t>& ranks, std::size_t total) {
  // at_least[k] = number of parts >= k, for k >= 1.
  std::vector<std::size_t> r{total};
  r.insert(r.end(), ranks.begin(), ranks.end());
  r.push_back(0);
  Partition p;
  for (std::size_t k = r.size() - 1; k >= 1; --k) {
    std::size_t at_least_k = r[k - 1] - r[k];
    std::size_t at_least_k1 = k < r.size() - 1 ? r[k] - r[k + 1] : 0;
    if (at_least_k < at_least_k1) throw Error("rank sequence is not a Jordan type");
    for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) p.parts.push_back(static_cast<int>(k));
  }
  return p;
}

Partition nilpotent_partition(const QMatrix& n) {
  if (n.rows() != n.cols()) throw DimensionMismatch("nilpotent_partition needs a square matrix");
  const std::size_t d = n.rows();
  std::vector<std::size_t> ranks;
  QMatrix power = n;
  for (std::size_t m = 1; m <= d; ++m) {
    std::size_t r = rank(power);
    if (r == 0) return partition_from_ranks(ranks, d);
    ranks.push_back(r);
    power = power * n;
  }
  throw NotNilpotent("matrix is not nilpotent");
}

// ------------------------------------------------------------------ Subspace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return tail(ambient, 0); }

Subspace Subspace::tail(std::size_t ambient, std::size_t from) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t i = from; i < ambient; ++i) {
    Vector v(ambient, Rational(0));
    v[i] = 1;
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  QMatrix m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw AmbientMismatch("vector length differs from ambient dimension");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  s.pivots_ = rref(m);
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(i));
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_[i][j]) != 0) r[j] -= f * basis_[i][j];
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Subspace kernel_basis(const QMatrix& m) {
  QMatrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), vs);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw AmbientMismatch("subspace_sum ambient dimensions differ");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.ambient(), all);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw AmbientMismatch("subspace_intersect ambient dimensions differ");
  const std::size_t n = u.ambient(), p = u.dim(), q = w.dim();
  if (p == 0 || q == 0) return Subspace::zero(n);
  QMatrix m(n, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = u.basis()[i][j];
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, p + i) = -w.basis()[i][j];
  Subspace k = kernel_basis(m);
  std::vector<Vector> vs;
  for (const auto& c : k.basis()) {
    Vector v(n, Rational(0));
    for (std::size_t i = 0; i < p; ++i)
      if (sgn(c[i]) != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * u.basis()[i][j];
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient() != inner.ambient()) throw AmbientMismatch("subspace_contains ambient dimensions differ");
  return std::all_of(inner.basis().begin(), inner.basis().end(),
                     [&](const Vector& v) { return outer.contains(v); });
}

}  // namespace degenlab
