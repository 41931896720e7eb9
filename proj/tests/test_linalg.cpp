#include <random>

#include "doctest.h"
#include "degenlab/linalg.hpp"
#include "oracles.hpp"

using namespace degenlab;

namespace {

QMatrix jordan(const std::vector<int>& blocks) {
  std::size_t n = 0;
  for (int b : blocks) n += static_cast<std::size_t>(b);
  QMatrix m(n, n);
  std::size_t off = 0;
  for (int b : blocks) {
    for (int i = 0; i + 1 < b; ++i) m(off + i, off + i + 1) = 1;
    off += static_cast<std::size_t>(b);
  }
  return m;
}

}  // namespace

TEST_CASE("rank, inverse and determinant") {
  QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  CHECK_THROWS_AS(invert(m), Singular);
  QMatrix g = QMatrix::from_rows({{2, 1, 0}, {0, 1, 0}, {1, 0, 3}}, 3);
  CHECK(determinant(g) == 6);
  CHECK(g * invert(g) == QMatrix::identity(3));
}

TEST_CASE("rank agrees with the naive oracle on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int s = 0; s < 200; ++s) {
    QMatrix m(5, 6);
    std::vector<Vector> rows(5, Vector(6));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 6; ++j) rows[i][j] = m(i, j) = (s % 3 == 0 && i == 4) ? m(0, j) : Rational(d(rng));
    CHECK(rank(m) == oracle::naive_rank(rows));
  }
}

TEST_CASE("nilpotent partition of Jordan matrices") {
  CHECK(nilpotent_partition(jordan({3, 2, 1})).parts == std::vector<int>{3, 2, 1});
  CHECK(nilpotent_partition(jordan({4})).label().to_string() == "(4)");
  CHECK(nilpotent_partition(QMatrix(3, 3)).label().parts.empty());
  CHECK_THROWS_AS(nilpotent_partition(QMatrix::identity(2)), NotNilpotent);
  CHECK(partition_from_ranks({2, 1}, 5).parts == std::vector<int>{3, 1, 1});
}

TEST_CASE("subspaces") {
  Subspace t = Subspace::tail(4, 2);
  CHECK(t.dim() == 2);
  CHECK(t.contains(Vector{0, 0, 1, -3}));
  CHECK_FALSE(t.contains(Vector{1, 0, 0, 0}));
  Subspace s = Subspace::span(4, {Vector{1, 0, 1, 0}, Vector{0, 0, 0, 1}});
  CHECK(subspace_intersect(s, t).dim() == 1);
  CHECK(subspace_sum(s, t).dim() == 3);
  CHECK(kernel_basis(QMatrix::from_rows({{1, 1, 0, 0}}, 4)).dim() == 3);
  CHECK_THROWS_AS(t.contains(Vector{1}), AmbientMismatch);
}
