#pragma once

// Anticommutative algebras given by structure constants over Q.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "degenlab/linalg.hpp"
#include "json.hpp"

namespace degenlab {

// Products are stored for i < j only (0-based); e_j e_i = -e_i e_j and e_i e_i = 0
// hold by construction. Zero products are never stored.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  // Sets e_i e_j (0-based). i == j requires v == 0 and throws NotSkew otherwise.
  void set_product(std::size_t i, std::size_t j, Vector v);
  // Adds c * e_k to e_i e_j.
  void add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

  // e_i e_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<std::pair<std::size_t, std::size_t>, Vector>& products() const { return prod_; }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.prod_ == b.prod_;
  }

 private:
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Vector> prod_;
};

Vector basis_vector(std::size_t n, std::size_t i);

Vector product(const StructureTensor& a, const Vector& x, const Vector& y);
// Matrix of y -> x y.
QMatrix left_mult_matrix(const StructureTensor& a, const Vector& x);

Subspace subspace_product(const StructureTensor& a, const Subspace& u, const Subspace& w);
// A^1 = A, A^{i+1} = A^i A + A A^i.
Subspace power_ideal(const StructureTensor& a, std::size_t i);
Subspace square(const StructureTensor& a);
Subspace annihilator(const StructureTensor& a);

struct NilpotencyResult {
  bool nilpotent = false;
  std::optional<std::size_t> index;  // least i with A^i = 0
};
NilpotencyResult is_nilpotent(const StructureTensor& a);

struct IdentityFlags {
  bool anticommutative = true;
  bool jacobi = false;
  bool malcev = false;
};
IdentityFlags identity_flags(const StructureTensor& a);
bool satisfies_jacobi(const StructureTensor& a);
bool satisfies_malcev(const StructureTensor& a);

// Least m <= max_m such that (L_x)^m = 0 for every x, decided by full
// polarization: every symmetrized word of m basis multiplications vanishes.
std::optional<std::size_t> engel_degree(const StructureTensor& a, std::size_t max_m);

// g * mu (x, y) = g mu(g^-1 x, g^-1 y). Throws Singular.
StructureTensor change_basis(const StructureTensor& a, const QMatrix& g);
// Structure constants of a in the basis whose i-th vector is row i of rows.
StructureTensor structure_in_basis(const StructureTensor& a, const QMatrix& rows);

// a (+) k^extra with the new basis vectors appended and central.
StructureTensor direct_sum_trivial(const StructureTensor& a, std::size_t extra);

// Dimension of the derivation algebra; the orbit has dimension n^2 minus this.
std::size_t derivation_dim(const StructureTensor& a);

// {"dim": n, "products": [{"i": 1, "j": 2, "value": [c_1, ..., c_n]}, ...]} with
// 1-based i < j and coefficients as integers or "p/q" strings.
nlohmann::json algebra_to_json(const StructureTensor& a);
StructureTensor algebra_from_json(const nlohmann::json& j);

// Compact multiplication table such as "e1e2=e3, e1e3=e5".
std::string multiplication_table(const StructureTensor& a);

}  // namespace degenlab
