#pragma once

// Degeneration certificates (parameterized bases), closed flag conditions and
// non-degeneration witnesses.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degenlab/algebra.hpp"
#include "degenlab/catalog.hpp"

namespace degenlab {

// Row i is E_i(t) in the standard basis.
using ParameterizedBasis = RfMatrix;

// Parses symbolic rows such as "e3+e4", "t*e4", "(1/t)*e{m+1} - (1/t^2)*e_n".
// An entry "c*eA..eB" expands to the rows c*e_A, ..., c*e_B (none when B < A).
// Index expressions may use n, m. Throws ParseError, or DimensionMismatch when
// the expansion does not produce exactly n rows of length n.
ParameterizedBasis parse_basis(const std::vector<std::string>& rows, std::size_t n,
                               const std::map<std::string, long>& vars);
// Same grammar for a single vector with rational coefficients ("e1+2*e3").
Vector parse_vector(const std::string& expr, std::size_t n, const std::map<std::string, long>& vars);

// Structure constants nu_ij^k(t) of a in the basis E, for i < j.
class RfTensor {
 public:
  explicit RfTensor(std::size_t n) : n_(n), c_(n * n * n) {}
  std::size_t dim() const { return n_; }
  RationalFunction& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const RationalFunction& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

 private:
  std::size_t n_;
  std::vector<RationalFunction> c_;
};

// Throws SingularFamily when det E is identically zero, DimensionMismatch on shape.
RfTensor apply_parameterized_basis(const StructureTensor& a, const ParameterizedBasis& e);

enum class VerdictKind { pass, fail, proved, refutation_not_found, refuted, invalid };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::fail;
  std::string detail;
  std::optional<QMatrix> counterexample;  // g for change_basis that refutes a witness or probe

  // True for pass, proved and refutation_not_found.
  bool ok() const;
};

// pass iff every nu_ij^k is regular at t = 0 with value target_ij^k.
Verdict verify_degeneration(const StructureTensor& source, const StructureTensor& target,
                            const ParameterizedBasis& e);

struct AlgebraRef {
  CatalogName name;
  std::size_t dim = 0;
  std::string to_string() const;
  StructureTensor build() const { return instantiate(name, dim); }
};

struct DegenerationCertificate {
  AlgebraRef source, target;
  std::vector<std::string> basis;  // symbolic rows, expanded with n = dim and m from the names
  std::string provenance;
  bool isomorphism = false;        // the two sides are expected to be isomorphic
};

std::map<std::string, long> certificate_vars(const AlgebraRef& source, const AlgebraRef& target);
Verdict verify_certificate(const DegenerationCertificate& cert);

// lambda(V_i, V_j) within V_k with V_i = span(e_i..e_n) and V_{n+1} = 0.
// head_target replaces V_k by span(e_1..e_k); it only exists as a negative control.
struct ClosedSetSpec {
  struct Triple {
    std::size_t i, j, k;  // 1-based
  };
  std::size_t dim = 0;
  std::vector<Triple> triples;
  bool head_target = false;

  std::string to_string() const;
};

bool closed_set_member(const StructureTensor& a, const ClosedSetSpec& spec);

// Random members of the linear locus moved by random lower-triangular g must
// stay in the locus; fail carries g.
Verdict lower_triangular_invariance_probe(const ClosedSetSpec& spec, std::size_t samples, std::uint64_t seed);

enum class WitnessKind { DimSquare, AnnDim, IWDominance, LieClosure, ClosedSet, BespokeR };
std::string to_string(WitnessKind k);
WitnessKind parse_witness_kind(const std::string& s);  // throws UnknownKind

struct NonDegenerationWitness {
  WitnessKind kind = WitnessKind::DimSquare;
  AlgebraRef source, target;
  std::string subscript;                  // the flag triples as cited, for reports
  std::optional<ClosedSetSpec> closed_set;  // ClosedSet
  std::optional<QMatrix> source_basis;    // ClosedSet, BespokeR: rows placing the source in the set
  std::optional<Vector> element;          // IWDominance: element of the target
  std::string provenance;
};

struct Budget {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
};

// Invariant kinds give proved or fail. ClosedSet and BespokeR give invalid when
// the source is not placed in the set, refuted when an orbit point of the target
// lands in it, and refutation_not_found otherwise.
Verdict verify_nondegeneration(const NonDegenerationWitness& w, const Budget& budget);

// The closed set R in dimension 7: linear flag conditions plus seven quadratic
// relations. Throws DimensionMismatch when dim != 7.
bool ex222_membership(const StructureTensor& a);
ClosedSetSpec ex222_linear_part();

// Samples trials random invertible g with entries in [-5, 5] and tests
// member(change_basis(b, g)); per-trial streams are seeded by (seed, trial).
Verdict randomized_orbit_refute(const StructureTensor& b, const std::function<bool(const StructureTensor&)>& member,
                                std::size_t trials, std::uint64_t seed);

// Since the sets are stable under lower-triangular g, and g = L P U, it suffices
// to test P U b for permutations P and upper unitriangular U. Tries every
// permutation with U = 1 (n <= 8), then trials random pairs (P, U).
Verdict permutation_orbit_refute(const StructureTensor& b, const std::function<bool(const StructureTensor&)>& member,
                                 std::size_t trials, std::uint64_t seed);

// change_basis by the permutation matrix P e_i = e_{perm[i]}, computed by relabeling.
StructureTensor permute_basis(const StructureTensor& a, const std::vector<std::size_t>& perm);

}  // namespace degenlab
