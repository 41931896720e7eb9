#pragma once

// The claim ledger: certificates, witnesses, chains and composed edges,
// validated on load and checked by run_ledger.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "degenlab/degeneration.hpp"
#include "json.hpp"

namespace degenlab {

// A chain A = X_0 -> X_1 -> ... -> X_l = zero at one dimension.
struct ChainSpec {
  AlgebraRef algebra;
  int expected_level = 0;
  std::vector<CatalogName> path;
};

// A -> C asserted by transitivity through certificate edges.
struct ComposedEdge {
  std::size_t dim = 0;
  std::vector<CatalogName> path;
  std::string provenance;
};

struct ClaimLedger {
  std::vector<DegenerationCertificate> certificates;  // one entry per dimension
  std::vector<NonDegenerationWitness> witnesses;      // one entry per dimension
  std::vector<ChainSpec> chains;
  std::vector<ComposedEdge> composed;
};

// Certificates and witnesses accept either {"source": {"name", "dim"}, ...} or
// {"source": "name", "dims": [...]}; the latter expands to one entry per dimension.
std::vector<DegenerationCertificate> parse_certificates(const nlohmann::json& j);
std::vector<NonDegenerationWitness> parse_witnesses(const nlohmann::json& j);

// Throws ParseError on malformed input and InconsistentLedger when a chain is
// broken or has the wrong length, an edge has no certificate, or a certificate
// and a witness claim the same ordered pair in the same dimension.
ClaimLedger parse_ledger(const nlohmann::json& j);
ClaimLedger load_ledger(const std::string& path);
// $DEGENLAB_LEDGER, else the shipped data/ledger.json.
std::string default_ledger_path();

struct RunOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::vector<std::size_t> dims;  // empty: every dimension in the ledger
};

struct Report {
  nlohmann::json json;
  std::map<std::size_t, std::string> dot;  // one digraph per dimension
  std::size_t fails = 0;
};

// Claims are checked independently; results are ordered by ledger index.
Report run_ledger(const ClaimLedger& ledger, const RunOptions& options);

}  // namespace degenlab
