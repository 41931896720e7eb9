#include <random>

#include "doctest.h"
#include "degenlab/algebra.hpp"
#include "degenlab/catalog.hpp"
#include "oracles.hpp"

using namespace degenlab;

namespace {

StructureTensor heisenberg() {
  StructureTensor a(3);
  a.add_term(0, 1, 2, 1);
  return a;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  Vector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("anticommutativity is structural") {
  StructureTensor a = heisenberg();
  CHECK(a.coefficient(0, 1, 2) == 1);
  CHECK(product(a, basis_vector(3, 1), basis_vector(3, 0)) == Vector{0, 0, -1});
  CHECK_THROWS_AS(a.set_product(1, 1, Vector{0, 0, 1}), NotSkew);
}

TEST_CASE("Heisenberg invariants") {
  StructureTensor a = heisenberg();
  CHECK(square(a).dim() == 1);
  CHECK(annihilator(a).dim() == 1);
  CHECK(is_nilpotent(a).index == std::optional<std::size_t>(3));
  CHECK(satisfies_jacobi(a));
  CHECK(engel_degree(a, 3) == std::optional<std::size_t>(2));
  CHECK(derivation_dim(a) == 6);
  CHECK(derivation_dim(StructureTensor(3)) == 9);
}

TEST_CASE("invariants agree with brute force on every catalog entry") {
  for (const auto& name : catalog_entries())
    for (std::size_t n : tested_dims(name)) {
      StructureTensor a = instantiate(name, n);
      CAPTURE(name.to_string());
      CAPTURE(n);
      CHECK(square(a).dim() == oracle::dim_square(a));
      CHECK(annihilator(a).dim() == oracle::dim_ann(a));
    }
}

TEST_CASE("Jacobi and Malcev on basis triples decide them for random vectors") {
  std::mt19937_64 rng(11);
  for (const char* text : {"T3_e34", "T22_e45", "T32_chi1", "eta_eps15"}) {
    CatalogName name = CatalogName::parse(text);
    StructureTensor a = instantiate(name, min_dim(name) + 1);
    const std::size_t n = a.dim();
    bool jac = true;
    for (int s = 0; s < 50 && jac; ++s) {
      Vector x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
      Vector j1 = product(a, product(a, x, y), z), j2 = product(a, product(a, y, z), x),
             j3 = product(a, product(a, z, x), y);
      for (std::size_t k = 0; k < n; ++k)
        if (j1[k] + j2[k] + j3[k] != 0) jac = false;
    }
    CAPTURE(text);
    CHECK(jac == satisfies_jacobi(a));
  }
}

TEST_CASE("engel degree agrees with random powers of L_a") {
  std::mt19937_64 rng(5);
  for (const char* text : {"T4", "T22", "eta(2)", "T32_e23"}) {
    CatalogName name = CatalogName::parse(text);
    StructureTensor a = instantiate(name, min_dim(name));
    auto m = engel_degree(a, a.dim());
    REQUIRE(m);
    for (int s = 0; s < 30; ++s) {
      QMatrix l = left_mult_matrix(a, random_vector(rng, a.dim())), p = QMatrix::identity(a.dim());
      for (std::size_t k = 0; k < *m; ++k) p = p * l;
      CHECK(p.is_zero());
    }
  }
}

TEST_CASE("basis change round trip and JSON round trip") {
  StructureTensor a = instantiate(CatalogName::parse("T22_e34"), 6);
  QMatrix g = QMatrix::identity(6);
  g(3, 0) = 2;
  g(5, 2) = Rational(-1, 3);
  CHECK(change_basis(change_basis(a, g), invert(g)) == a);
  CHECK(algebra_from_json(algebra_to_json(a)) == a);
  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"dim", 2}, {"products", {{{"i", 2}, {"j", 1}, {"value", {0, 1}}}}}}),
                  ParseError);
}

TEST_CASE("trivial direct summand keeps the products") {
  StructureTensor a = direct_sum_trivial(heisenberg(), 2);
  CHECK(a.dim() == 5);
  CHECK(annihilator(a).dim() == 3);
  CHECK(square(a).dim() == 1);
}
