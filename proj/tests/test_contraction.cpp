#include "doctest.h"
#include "degenlab/catalog.hpp"
#include "degenlab/contraction.hpp"
#include "oracles.hpp"

using namespace degenlab;

TEST_CASE("contracting eta_1 along e1 leaves it unchanged") {
  StructureTensor eta1 = instantiate(CatalogName::parse("eta(1)"), 3);
  CHECK(iw_contract(eta1, 1) == eta1);
}

TEST_CASE("contraction along a non-subalgebra is rejected") {
  StructureTensor t3 = instantiate(CatalogName::parse("T3"), 4);
  CHECK_THROWS_AS(iw_contract(t3, 2), NotASubalgebra);
}

TEST_CASE("rank sequences and dominance") {
  StructureTensor t4 = instantiate(CatalogName::parse("T4"), 5);
  CHECK(rank_sequence(t4, basis_vector(5, 0)).ranks == std::vector<std::size_t>{3, 2, 1});
  CHECK(dominates(RankSequence{{3, 2}}, RankSequence{{3}}));
  CHECK_FALSE(dominates(RankSequence{{2}}, RankSequence{{2, 1}}));
}

TEST_CASE("iw_max ranks equal the grid maximum for small algebras") {
  for (const char* text : {"T22", "T3_e24", "T4_e23", "T22_e34", "eta_eps_double(2)", "T32_e23"}) {
    CatalogName name = CatalogName::parse(text);
    StructureTensor a = instantiate(name, min_dim(name));
    if (a.dim() > 7) continue;
    CAPTURE(text);
    CHECK(iw_max(a, 1, 200).ranks.ranks == oracle::grid_max_ranks(a));
  }
}

TEST_CASE("the dominant contraction of an iw contraction is itself") {
  StructureTensor a = instantiate(CatalogName::parse("T3_e23"), 6);
  IwMax r = iw_max(a, 3, 200);
  CHECK(r.partition.label().to_string() == "(3)");
  CHECK(rank_sequence(a, r.witness) == r.ranks);
}
