#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

namespace {

using Row = std::vector<Rational>;

Rational coef(const StructureTensor& a, std::size_t i, std::size_t j, std::size_t k) {
  if (i == j) return 0;
  return i < j ? a.coefficient(i, j, k) : Rational(-a.coefficient(j, i, k));
}

// x * y from the raw coefficients.
Row mul(const StructureTensor& a, const Row& x, const Row& y) {
  const std::size_t n = a.dim();
  Row out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * coef(a, i, j, k);
    }
  }
  return out;
}

// Solves m x = b for square invertible m.
Row solve(std::vector<Row> m, Row b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

}  // namespace

std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t dim_square(const StructureTensor& a) {
  const std::size_t n = a.dim();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Row v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = coef(a, i, j, k);
      rows.push_back(std::move(v));
    }
  return naive_rank(rows);
}

std::size_t dim_ann(const StructureTensor& a) {
  const std::size_t n = a.dim();
  // Unknown x_i; equation (j, k): sum_i x_i c_ij^k = 0.
  std::vector<Row> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Row eq(n);
      for (std::size_t i = 0; i < n; ++i) eq[i] = coef(a, i, j, k);
      rows.push_back(std::move(eq));
    }
  return n - naive_rank(rows);
}

std::vector<std::size_t> grid_max_ranks(const StructureTensor& a) {
  const std::size_t n = a.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<std::size_t> best;
  for (std::size_t code = 1; code < total; ++code) {
    Row x(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) x[i] = static_cast<long>(c % 3) - 1;
    // Images of the basis under L_x^m, as rows.
    std::vector<Row> img;
    for (std::size_t j = 0; j < n; ++j) {
      Row e(n, Rational(0));
      e[j] = 1;
      img.push_back(e);
    }
    for (std::size_t m = 0;; ++m) {
      for (auto& v : img) v = mul(a, x, v);
      std::size_t r = naive_rank(img);
      if (r == 0) break;
      if (best.size() <= m) best.resize(m + 1, 0);
      best[m] = std::max(best[m], r);
    }
  }
  return best;
}

double limit_gap_at(const StructureTensor& source, const StructureTensor& target,
                    const degenlab::ParameterizedBasis& e, const Rational& t) {
  const std::size_t n = source.dim();
  std::vector<Row> rows(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = e(i, j).num().eval(t) / e(i, j).den().eval(t);
  // Columns of E^T are the basis vectors E_k.
  std::vector<Row> et(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) et[j][i] = rows[i][j];
  double gap = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Row nu = solve(et, mul(source, rows[i], rows[j]));
      for (std::size_t k = 0; k < n; ++k)
        gap = std::max(gap, std::fabs(Rational(nu[k] - target.coefficient(i, j, k)).get_d()));
    }
  return gap;
}

}  // namespace oracle
