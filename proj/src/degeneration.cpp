#include "degenlab/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "degenlab/contraction.hpp"

namespace degenlab {

// ------------------------------------------------------------ basis families

RfTensor apply_parameterized_basis(const StructureTensor& a, const ParameterizedBasis& e) {
  const std::size_t n = a.dim();
  if (e.rows() != n || e.cols() != n) throw DimensionMismatch("basis shape differs from algebra dimension");
  RfMatrix q;
  try {
    q = invert(e.transpose());
  } catch (const Singular&) {
    throw SingularFamily("det E(t) is identically zero");
  }
  RfTensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // mu(E_i, E_j) in standard coordinates.
      std::vector<RationalFunction> v(n, RationalFunction(0L));
      bool any = false;
      for (const auto& [ab, vec] : a.products()) {
        auto [x, y] = ab;
        RationalFunction c = e(i, x) * e(j, y) - e(i, y) * e(j, x);
        if (c.is_zero()) continue;
        any = true;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(vec[k]) != 0) v[k] = v[k] + c * RationalFunction(vec[k]);
      }
      if (!any) continue;
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction s(0L);
        for (std::size_t l = 0; l < n; ++l)
          if (!v[l].is_zero() && !q(k, l).is_zero()) s = s + q(k, l) * v[l];
        out.at(i, j, k) = s;
      }
    }
  return out;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::pass: return "PASS";
    case VerdictKind::fail: return "FAIL";
    case VerdictKind::proved: return "PROVED";
    case VerdictKind::refutation_not_found: return "REFUTATION-NOT-FOUND";
    case VerdictKind::refuted: return "REFUTED";
    case VerdictKind::invalid: return "INVALID";
  }
  return "?";
}

bool Verdict::ok() const {
  return kind == VerdictKind::pass || kind == VerdictKind::proved || kind == VerdictKind::refutation_not_found;
}

Verdict verify_degeneration(const StructureTensor& source, const StructureTensor& target,
                            const ParameterizedBasis& e) {
  const std::size_t n = source.dim();
  if (target.dim() != n) return {VerdictKind::fail, "source and target dimensions differ", std::nullopt};
  RfTensor nu = apply_parameterized_basis(source, e);
  auto where = [](std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const RationalFunction& f = nu.at(i, j, k);
        if (!f.regular_at_zero())
          return {VerdictKind::fail, "pole at t=0 in nu" + where(i, j, k) + " = " + f.to_string(), std::nullopt};
        Rational v = rf_eval_at_zero(f);
        if (v != target.coefficient(i, j, k))
          return {VerdictKind::fail,
                  "limit mismatch at " + where(i, j, k) + ": got " + to_string(v) + ", target has " +
                      to_string(target.coefficient(i, j, k)),
                  std::nullopt};
      }
  return {VerdictKind::pass, "", std::nullopt};
}

std::string AlgebraRef::to_string() const { return name.to_string() + "[n=" + std::to_string(dim) + "]"; }

std::map<std::string, long> certificate_vars(const AlgebraRef& source, const AlgebraRef& target) {
  std::map<std::string, long> v{{"n", static_cast<long>(source.dim)}};
  if (source.name.param) v["m"] = *source.name.param;
  else if (target.name.param) v["m"] = *target.name.param;
  return v;
}

Verdict verify_certificate(const DegenerationCertificate& cert) {
  try {
    if (cert.source.dim != cert.target.dim) return {VerdictKind::fail, "dimension mismatch", std::nullopt};
    auto e = parse_basis(cert.basis, cert.source.dim, certificate_vars(cert.source, cert.target));
    return verify_degeneration(cert.source.build(), cert.target.build(), e);
  } catch (const Error& ex) {
    return {VerdictKind::fail, ex.what(), std::nullopt};
  }
}

// ---------------------------------------------------------------- closed sets

std::string ClosedSetSpec::to_string() const {
  std::string s = "[";
  for (std::size_t t = 0; t < triples.size(); ++t) {
    if (t) s += ",";
    s += "(" + std::to_string(triples[t].i) + "," + std::to_string(triples[t].j) + "," + std::to_string(triples[t].k) + ")";
  }
  return s + (head_target ? "]head" : "]");
}

namespace {

// Whether component k (0-based) of e_a e_b is allowed by every triple.
bool allowed(const ClosedSetSpec& spec, std::size_t a, std::size_t b, std::size_t k) {
  for (const auto& t : spec.triples) {
    bool hit = (a + 1 >= t.i && b + 1 >= t.j) || (b + 1 >= t.i && a + 1 >= t.j);
    if (!hit) continue;
    bool inside = spec.head_target ? k + 1 <= t.k : k + 1 >= t.k;
    if (!inside) return false;
  }
  return true;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

QMatrix random_lower_triangular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> off(-3, 3), diag(1, 3), sign(0, 1);
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = diag(rng) * (sign(rng) ? 1 : -1);
    for (std::size_t j = 0; j < i; ++j) g(i, j) = off(rng);
  }
  return g;
}

QMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  for (;;) {
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = entry(rng);
    if (sgn(determinant(g)) != 0) return g;
  }
}

}  // namespace

bool closed_set_member(const StructureTensor& a, const ClosedSetSpec& spec) {
  if (a.dim() != spec.dim) throw DimensionMismatch("closed set and algebra dimensions differ");
  for (const auto& [ab, v] : a.products())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0 && !allowed(spec, ab.first, ab.second, k)) return false;
  return true;
}

Verdict lower_triangular_invariance_probe(const ClosedSetSpec& spec, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = spec.dim;
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = stream(seed, s);
    std::uniform_int_distribution<int> entry(-3, 3);
    StructureTensor a(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k)
          if (allowed(spec, x, y, k)) {
            int c = entry(rng);
            if (c != 0) a.add_term(x, y, k, Rational(c));
          }
    QMatrix g = random_lower_triangular(n, rng);
    if (!closed_set_member(change_basis(a, g), spec))
      return {VerdictKind::fail, "sample " + std::to_string(s) + " leaves " + spec.to_string(), g};
  }
  return {VerdictKind::pass, std::to_string(samples) + " samples", std::nullopt};
}

// ------------------------------------------------------------ the closed set R

ClosedSetSpec ex222_linear_part() {
  return {7, {{1, 7, 8}, {2, 6, 8}, {3, 5, 8}, {1, 4, 7}, {2, 3, 6}, {1, 3, 5}, {1, 1, 4}}, false};
}

bool ex222_membership(const StructureTensor& a) {
  if (a.dim() != 7) throw DimensionMismatch("the set R lives in dimension 7");
  if (!closed_set_member(a, ex222_linear_part())) return false;
  auto l = [&](std::size_t i, std::size_t j, std::size_t k) { return a.coefficient(i - 1, j - 1, k - 1); };
  return l(1, 2, 4) * l(3, 4, 7) == l(2, 3, 6) * l(1, 6, 7) &&
         sgn(l(1, 2, 4) * l(3, 4, 7) + l(1, 3, 5) * l(2, 5, 7)) == 0 &&
         l(1, 2, 5) * l(3, 4, 7) == l(1, 3, 5) * l(2, 4, 7) &&
         sgn(l(1, 2, 5) * l(2, 5, 7) + l(1, 2, 4) * l(2, 4, 7)) == 0 &&
         l(2, 3, 6) * l(1, 5, 7) == l(1, 3, 6) * l(2, 5, 7) &&
         sgn(l(1, 3, 6) * l(1, 6, 7) + l(1, 3, 5) * l(1, 5, 7)) == 0 &&
         sgn(l(2, 3, 6) * l(1, 4, 7) - l(1, 3, 6) * l(2, 4, 7) + l(1, 2, 6) * l(3, 4, 7)) == 0;
}

// ------------------------------------------------------------- orbit sampling

StructureTensor permute_basis(const StructureTensor& a, const std::vector<std::size_t>& perm) {
  StructureTensor out(a.dim());
  for (const auto& [ab, v] : a.products())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) out.add_term(perm[ab.first], perm[ab.second], perm[k], v[k]);
  return out;
}

namespace {

QMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  QMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1;
  return p;
}

}  // namespace

Verdict randomized_orbit_refute(const StructureTensor& b, const std::function<bool(const StructureTensor&)>& member,
                                std::size_t trials, std::uint64_t seed) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = stream(seed, t);
    QMatrix g = random_invertible(b.dim(), rng);
    if (member(change_basis(b, g)))
      return {VerdictKind::refuted, "random trial " + std::to_string(t) + " lands in the set", g};
  }
  return {VerdictKind::refutation_not_found, std::to_string(trials) + " random orbit points outside the set",
          std::nullopt};
}

Verdict permutation_orbit_refute(const StructureTensor& b, const std::function<bool(const StructureTensor&)>& member,
                                 std::size_t trials, std::uint64_t seed) {
  const std::size_t n = b.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t swept = 0;
  if (n <= 8) {
    do {
      ++swept;
      if (member(permute_basis(b, perm)))
        return {VerdictKind::refuted, "a relabeling of the basis lands in the set", permutation_matrix(perm)};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::uniform_int_distribution<int> entry(-2, 2);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = stream(seed ^ 0x9e3779b97f4a7c15ULL, t);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    QMatrix u = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) u(i, j) = entry(rng);
    QMatrix g = permutation_matrix(perm) * u;
    if (member(change_basis(b, g)))
      return {VerdictKind::refuted, "permuted unitriangular trial " + std::to_string(t) + " lands in the set", g};
  }
  return {VerdictKind::refutation_not_found,
          std::to_string(swept) + " relabelings and " + std::to_string(trials) +
              " permuted unitriangular orbit points outside the set",
          std::nullopt};
}

// --------------------------------------------------------------- witnesses

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::DimSquare: return "DimSquare";
    case WitnessKind::AnnDim: return "AnnDim";
    case WitnessKind::IWDominance: return "IWDominance";
    case WitnessKind::LieClosure: return "LieClosure";
    case WitnessKind::ClosedSet: return "ClosedSet";
    case WitnessKind::BespokeR: return "BespokeR";
  }
  return "?";
}

WitnessKind parse_witness_kind(const std::string& s) {
  for (auto k : {WitnessKind::DimSquare, WitnessKind::AnnDim, WitnessKind::IWDominance, WitnessKind::LieClosure,
                 WitnessKind::ClosedSet, WitnessKind::BespokeR})
    if (to_string(k) == s) return k;
  throw UnknownKind("unknown witness kind '" + s + "'");
}

namespace {

Verdict invariant_verdict(bool proved, const std::string& detail) {
  return {proved ? VerdictKind::proved : VerdictKind::fail, detail, std::nullopt};
}

Verdict two_sided(const StructureTensor& src, const StructureTensor& tgt, const std::optional<QMatrix>& basis,
                  const std::function<bool(const StructureTensor&)>& member, const Budget& budget) {
  StructureTensor placed = basis ? structure_in_basis(src, *basis) : src;
  if (!member(placed)) return {VerdictKind::invalid, "the stored basis does not place the source in the set", std::nullopt};
  Verdict v = permutation_orbit_refute(tgt, member, budget.trials, budget.seed);
  if (v.kind == VerdictKind::refuted) return v;
  Verdict r = randomized_orbit_refute(tgt, member, budget.trials, budget.seed);
  if (r.kind == VerdictKind::refuted) return r;
  return {VerdictKind::refutation_not_found, "source in set; " + v.detail + "; " + r.detail + " (falsification only)",
          std::nullopt};
}

}  // namespace

Verdict verify_nondegeneration(const NonDegenerationWitness& w, const Budget& budget) {
  StructureTensor src = w.source.build(), tgt = w.target.build();
  if (src.dim() != tgt.dim()) return {VerdictKind::invalid, "dimension mismatch", std::nullopt};
  switch (w.kind) {
    case WitnessKind::DimSquare: {
      std::size_t a = square(src).dim(), b = square(tgt).dim();
      return invariant_verdict(a < b, "dim A^2 = " + std::to_string(a) + ", dim B^2 = " + std::to_string(b));
    }
    case WitnessKind::AnnDim: {
      std::size_t a = annihilator(src).dim(), b = annihilator(tgt).dim();
      return invariant_verdict(a > b, "dim Ann A = " + std::to_string(a) + ", dim Ann B = " + std::to_string(b));
    }
    case WitnessKind::IWDominance: {
      if (!w.element) return {VerdictKind::invalid, "IWDominance needs an element", std::nullopt};
      RankSequence rb = rank_sequence(tgt, *w.element);
      IwMax ia = iw_max(src, budget.seed, 200);
      return invariant_verdict(!dominates(ia.ranks, rb),
                               "iw_max ranks of A " + ia.ranks.to_string() + ", element of B " + rb.to_string());
    }
    case WitnessKind::LieClosure: {
      bool ja = satisfies_jacobi(src), jb = satisfies_jacobi(tgt);
      return invariant_verdict(ja && !jb, std::string("Jacobi: A ") + (ja ? "yes" : "no") + ", B " + (jb ? "yes" : "no"));
    }
    case WitnessKind::ClosedSet: {
      if (!w.closed_set) return {VerdictKind::invalid, "ClosedSet needs triples", std::nullopt};
      const ClosedSetSpec spec = *w.closed_set;
      return two_sided(src, tgt, w.source_basis, [&](const StructureTensor& x) { return closed_set_member(x, spec); },
                       budget);
    }
    case WitnessKind::BespokeR:
      return two_sided(src, tgt, w.source_basis, ex222_membership, budget);
  }
  throw UnknownKind("witness kind");
}

}  // namespace degenlab
