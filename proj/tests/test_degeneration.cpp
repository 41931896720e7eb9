#include "doctest.h"
#include "degenlab/contraction.hpp"
#include "degenlab/degeneration.hpp"
#include "oracles.hpp"

using namespace degenlab;

namespace {

AlgebraRef ref(const char* s, std::size_t n) { return {CatalogName::parse(s), n}; }

}  // namespace

TEST_CASE("basis rows expand ranges and index expressions") {
  ParameterizedBasis e = parse_basis({"e1", "t*e2..e{n-1}", "(1/t)*e_n+e1"}, 5, {{"n", 5}});
  RationalFunction t = RationalFunction::t();
  CHECK(e(1, 1) == t);
  CHECK(e(3, 3) == t);
  CHECK(e(4, 4) == RationalFunction(1) / t);
  CHECK(e(4, 0) == RationalFunction(1));
  CHECK(parse_basis({"e1..e0", "e1", "e2"}, 2, {}).rows() == 2);
  CHECK_THROWS_AS(parse_basis({"e1"}, 2, {}), DimensionMismatch);
  CHECK_THROWS_AS(parse_basis({"e1", "e+"}, 2, {}), ParseError);
  CHECK(parse_vector("e1-2*e3", 3, {}) == Vector{1, 0, -2});
}

TEST_CASE("certificate verdicts") {
  StructureTensor n3 = instantiate(CatalogName::parse("n3"), 3), zero(3);
  CHECK(verify_degeneration(n3, zero, parse_basis({"t*e1", "e2", "e3"}, 3, {})).kind == VerdictKind::pass);
  Verdict pole = verify_degeneration(n3, zero, parse_basis({"(1/t)*e1", "e2", "e3"}, 3, {}));
  CHECK(pole.kind == VerdictKind::fail);
  CHECK(pole.detail.find("pole at t=0") != std::string::npos);
  Verdict same = verify_degeneration(n3, zero, parse_basis({"e1", "e2", "e3"}, 3, {}));
  CHECK(same.detail.find("limit mismatch") != std::string::npos);
  CHECK_THROWS_AS(apply_parameterized_basis(n3, parse_basis({"e1", "e1", "e3"}, 3, {})), SingularFamily);
}

TEST_CASE("the skew-pair arrow matches the numeric limit oracle") {
  DegenerationCertificate c{ref("T22_e45", 7), ref("T22_e34", 7),
                            {"e1", "e2", "e3+e4", "e5", "t*e4", "e6..e{n}"}, "", false};
  CHECK(verify_certificate(c).kind == VerdictKind::pass);
  ParameterizedBasis e = parse_basis(c.basis, 7, certificate_vars(c.source, c.target));
  double g1 = oracle::limit_gap_at(c.source.build(), c.target.build(), e, Rational(1, 1000));
  double g2 = oracle::limit_gap_at(c.source.build(), c.target.build(), e, Rational(1, 1000000));
  CHECK(g2 < 1e-5);
  CHECK(g2 <= g1);
}

TEST_CASE("closed sets are stable under lower-triangular changes") {
  ClosedSetSpec spec{6, {{1, 3, 6}, {3, 3, 7}}, false};
  CHECK(lower_triangular_invariance_probe(spec, 100, 9).kind == VerdictKind::pass);
  // span(e_1, e_2) is not stable under lower-triangular changes.
  ClosedSetSpec head{6, {{1, 1, 2}}, true};
  CHECK(lower_triangular_invariance_probe(head, 100, 9).kind == VerdictKind::fail);
  CHECK(lower_triangular_invariance_probe(ex222_linear_part(), 100, 9).kind == VerdictKind::pass);
}

TEST_CASE("invariant witnesses prove or fail") {
  NonDegenerationWitness w;
  w.kind = WitnessKind::DimSquare;
  w.source = ref("T22_e24", 6);
  w.target = ref("T22_e23", 6);
  CHECK(verify_nondegeneration(w, {}).kind == VerdictKind::proved);
  std::swap(w.source, w.target);
  CHECK(verify_nondegeneration(w, {}).kind == VerdictKind::fail);
  w.kind = WitnessKind::LieClosure;
  w.source = ref("T32_e23", 6);
  w.target = ref("T3_e34", 6);
  CHECK(verify_nondegeneration(w, {}).kind == VerdictKind::proved);
  CHECK(parse_witness_kind("AnnDim") == WitnessKind::AnnDim);
  CHECK_THROWS_AS(parse_witness_kind("Bogus"), UnknownKind);
}

TEST_CASE("closed-set witnesses are falsification only, or invalid when misplaced") {
  NonDegenerationWitness w;
  w.kind = WitnessKind::ClosedSet;
  w.source = ref("T22_e24", 6);
  w.target = ref("T22_e34", 6);
  w.closed_set = ClosedSetSpec{6, {{1, 3, 6}, {3, 3, 7}}, false};
  CHECK(verify_nondegeneration(w, {200, 1}).kind == VerdictKind::refutation_not_found);
  // A set containing the target is refuted at once.
  w.closed_set = ClosedSetSpec{6, {{1, 1, 5}}, false};
  w.source = ref("T22", 6);
  w.target = ref("n3", 6);
  CHECK(verify_nondegeneration(w, {200, 1}).kind == VerdictKind::refuted);
  w.source = ref("T22_e34", 6);
  w.closed_set = ClosedSetSpec{6, {{1, 1, 6}}, false};
  CHECK(verify_nondegeneration(w, {200, 1}).kind == VerdictKind::invalid);
}

TEST_CASE("membership in R") {
  StructureTensor special = instantiate(CatalogName::parse("T222_e7special"), 7);
  QMatrix rows(7, 7);
  const std::size_t order[] = {0, 1, 2, 4, 5, 3, 6};  // e1, e2, e3, e5, e6, e4, e7
  for (std::size_t i = 0; i < 7; ++i) rows(i, order[i]) = 1;
  CHECK(ex222_membership(structure_in_basis(special, rows)));
  CHECK_FALSE(ex222_membership(instantiate(CatalogName::parse("T22_e45"), 7)));
  CHECK_THROWS_AS(ex222_membership(StructureTensor(6)), DimensionMismatch);
}

TEST_CASE("relabeling agrees with a permutation basis change") {
  StructureTensor a = instantiate(CatalogName::parse("T3_e45"), 6);
  std::vector<std::size_t> perm{2, 0, 1, 5, 3, 4};
  QMatrix p(6, 6);
  for (std::size_t i = 0; i < 6; ++i) p(perm[i], i) = 1;
  CHECK(permute_basis(a, perm) == change_basis(a, p));
}
