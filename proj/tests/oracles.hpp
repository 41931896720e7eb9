#pragma once

// Brute-force oracles, written without the library's linear algebra so that
// frozen expected values do not depend on the code under test.

#include <cstdint>
#include <vector>

#include "degenlab/algebra.hpp"
#include "degenlab/degeneration.hpp"

namespace oracle {

using degenlab::Rational;
using degenlab::StructureTensor;

// Plain Gaussian elimination over Q on a copy.
std::size_t naive_rank(std::vector<std::vector<Rational>> rows);

// Rank of the n^2 products e_i e_j viewed as vectors.
std::size_t dim_square(const StructureTensor& a);
// n minus the rank of the system x e_j = 0 for all j.
std::size_t dim_ann(const StructureTensor& a);

// Ranks of (L_x)^1, (L_x)^2, ... for x with entries in {-1, 0, 1}, maximised
// componentwise over the whole grid (3^n points).
std::vector<std::size_t> grid_max_ranks(const StructureTensor& a);

// nu(t) at a rational t by solving E^T nu = mu(E_i, E_j) by naive elimination;
// returns the largest |nu_ij^k(t) - target_ij^k| as a double.
double limit_gap_at(const StructureTensor& source, const StructureTensor& target,
                    const degenlab::ParameterizedBasis& e, const Rational& t);

}  // namespace oracle
