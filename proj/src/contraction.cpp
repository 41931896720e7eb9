#include "degenlab/contraction.hpp"

#include <random>

namespace degenlab {

std::string RankSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + std::to_string(ranks[i]);
  return s + ")";
}

StructureTensor iw_contract(const StructureTensor& a, std::size_t m) {
  const std::size_t n = a.dim();
  if (m == 0 || m >= n) throw DimensionMismatch("iw_contract needs 0 < m < n");
  StructureTensor out(n);
  for (const auto& [ij, v] : a.products()) {
    auto [i, j] = ij;
    if (j < m) {
      for (std::size_t k = m; k < n; ++k)
        if (sgn(v[k]) != 0) throw NotASubalgebra("span(e_1..e_m) is not closed under the product");
      out.set_product(i, j, v);
    } else if (i < m) {
      // E_i E_j = t mu(e_i, e_j): components on the scaled complement survive.
      Vector w = v;
      for (std::size_t k = 0; k < m; ++k) w[k] = 0;
      out.set_product(i, j, std::move(w));
    }
    // Both factors scaled: the product carries at least one extra factor of t.
  }
  return out;
}

RankSequence rank_sequence(const StructureTensor& a, const Vector& x) {
  const std::size_t n = a.dim();
  QMatrix l = left_mult_matrix(a, x);
  QMatrix p = l;
  RankSequence rs;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t r = rank(p);
    if (r == 0) return rs;
    rs.ranks.push_back(r);
    p = p * l;
  }
  throw NotEngelAt("left multiplication is not nilpotent");
}

bool dominates(const RankSequence& p, const RankSequence& q) {
  for (std::size_t i = 0; i < q.ranks.size(); ++i) {
    std::size_t pi = i < p.ranks.size() ? p.ranks[i] : 0;
    if (pi < q.ranks[i]) return false;
  }
  return true;
}

namespace {

// Jordan type of L_c acting on A / <c>.
Partition quotient_partition(const StructureTensor& a, const Vector& c) {
  const std::size_t n = a.dim();
  QMatrix l = left_mult_matrix(a, c);
  QMatrix p = l;
  std::vector<std::size_t> ranks;
  for (std::size_t m = 1; m <= n; ++m) {
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = p(i, j);
      aug(i, n) = c[i];
    }
    std::size_t r = rank(aug) - 1;  // dim((Im + <c>) / <c>)
    if (r == 0) break;
    ranks.push_back(r);
    p = p * l;
  }
  return partition_from_ranks(ranks, n - 1);
}

}  // namespace

IwMax iw_max(const StructureTensor& a, std::uint64_t seed, std::size_t trials) {
  const std::size_t n = a.dim();
  if (n < 2) return {Partition{std::vector<int>(n > 0 ? n - 1 : 0, 1)}, RankSequence{}, Vector(n, Rational(1))};

  std::vector<Vector> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(basis_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = basis_vector(n, i);
      v[j] = 1;
      pool.push_back(std::move(v));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int s = 0; s < 64; ++s) {
    Vector v(n);
    bool nonzero = false;
    for (auto& x : v) {
      x = entry(rng);
      nonzero = nonzero || sgn(x) != 0;
    }
    if (nonzero) pool.push_back(std::move(v));
  }

  std::vector<RankSequence> seqs;
  for (const auto& v : pool) seqs.push_back(rank_sequence(a, v));

  std::size_t best = 0;
  for (std::size_t i = 1; i < seqs.size(); ++i)
    if (dominates(seqs[i], seqs[best]) && !(seqs[i] == seqs[best])) best = i;

  Vector c = pool[best];
  RankSequence cs = seqs[best];
  std::size_t used = 0;
  for (;;) {
    std::size_t rival = seqs.size();
    for (std::size_t i = 0; i < seqs.size(); ++i)
      if (!dominates(cs, seqs[i])) {
        rival = i;
        break;
      }
    if (rival == seqs.size()) break;
    // c + alpha b dominates both c and b for generic alpha.
    bool improved = false;
    while (used < trials && !improved) {
      ++used;
      int alpha = entry(rng);
      if (alpha == 0) continue;
      Vector cand = c;
      for (std::size_t k = 0; k < n; ++k) cand[k] += alpha * pool[rival][k];
      RankSequence rs = rank_sequence(a, cand);
      if (dominates(rs, cs) && dominates(rs, seqs[rival])) {
        c = std::move(cand);
        cs = std::move(rs);
        improved = true;
      }
    }
    if (!improved)
      throw IncomparableMaxima("sampled rank sequences " + cs.to_string() + " and " + seqs[rival].to_string() +
                               " remain incomparable");
  }
  return {quotient_partition(a, c), cs, c};
}

}  // namespace degenlab
