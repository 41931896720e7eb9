#pragma once

// Inonu-Wigner contractions and the dominant one-dimensional contraction.

#include <cstdint>
#include <vector>

#include "degenlab/algebra.hpp"

namespace degenlab {

// Ranks of (L_a)^1, (L_a)^2, ... truncated before the first zero.
struct RankSequence {
  std::vector<std::size_t> ranks;
  std::string to_string() const;
  friend bool operator==(const RankSequence& a, const RankSequence& b) { return a.ranks == b.ranks; }
};

// Contraction along span(e_1..e_m): the complement is scaled by t and t -> 0.
// Throws NotASubalgebra when span(e_1..e_m) is not closed under the product.
StructureTensor iw_contract(const StructureTensor& a, std::size_t m);

// Throws NotEngelAt when L_a is not nilpotent.
RankSequence rank_sequence(const StructureTensor& a, const Vector& x);

// Componentwise >= after padding with zeros.
bool dominates(const RankSequence& p, const RankSequence& q);

struct IwMax {
  Partition partition;  // Jordan type of L_c on A / <c>, ones included
  RankSequence ranks;
  Vector witness;       // the element c
};

// The dominant rank sequence over a deterministic candidate pool (basis vectors,
// pairwise sums, seeded random vectors) refined by c + alpha b perturbations.
// Throws IncomparableMaxima if no single candidate dominates the pool.
IwMax iw_max(const StructureTensor& a, std::uint64_t seed, std::size_t trials);

}  // namespace degenlab
