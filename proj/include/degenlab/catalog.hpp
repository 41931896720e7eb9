#pragma once

// Named algebra families, their level tables and the T^{2,2} classifier.
// Family data lives in data/catalog.json, compiled into the library.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degenlab/algebra.hpp"

namespace degenlab {

// A family plus its integer parameter, if the family has one ("eta(3)").
struct CatalogName {
  std::string family;
  std::optional<int> param;

  // Accepts "eta(3)", "eta3", "T2k2_e23(4)", "T(3,2)" and plain family names.
  // Throws UnknownKind for unknown families or missing/extra parameters.
  static CatalogName parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CatalogName&, const CatalogName&) = default;
  friend auto operator<=>(const CatalogName&, const CatalogName&) = default;
};

// A level value: exact, or a lower bound when at_least is set.
struct Level {
  int value = 0;
  bool at_least = false;

  std::string to_string() const;
  friend bool operator==(const Level&, const Level&) = default;
};

struct LevelInfo {
  Level level;
  Level infinite_level;
};

// Integer arithmetic over + - * and parentheses with named variables.
// Throws ParseError on malformed input or unbound variables.
long eval_int_expr(std::string_view expr, const std::map<std::string, long>& vars);

// Every family instance in the manifest, parametric families expanded over
// their parameter range.
std::vector<CatalogName> catalog_entries();

std::string display_name(const CatalogName& name);
std::string family_group(const CatalogName& name);
std::size_t min_dim(const CatalogName& name);
std::optional<std::size_t> max_dim(const CatalogName& name);
// The smallest two legal dimensions (one when the family has a single dimension).
std::vector<std::size_t> tested_dims(const CatalogName& name);

// Throws DimensionOutOfRange or UnknownKind.
StructureTensor instantiate(const CatalogName& name, std::size_t n);
LevelInfo level_lookup(const CatalogName& name, std::size_t n);
// Label of the maximal one-dimensional contraction, ones omitted.
Partition expected_iw_max(const CatalogName& name);

// U x| k^2 with e_i e_j = b1(i,j) e_{n-1} + b2(i,j) e_n on U = span(e_1..e_{n-2}).
// Throws NotSkew, DimensionMismatch, or NotSurjective when b1, b2 are dependent.
StructureTensor build_skew_pair_algebra(const QMatrix& b1, const QMatrix& b2);

struct Classification {
  enum class Kind { name, level_at_least_6, needs_extension };
  Kind kind = Kind::name;
  std::optional<CatalogName> name;

  std::string to_string() const;
};

// Identifies an algebra with maximal contraction T^{2,2} among T22, T22_e23,
// T22_e24, T22_e34 and T22_e45 from basis-free invariants of its skew pencil.
// Throws PreconditionViolated when the maximal contraction is not T^{2,2}.
Classification classify_T22(const StructureTensor& a);

}  // namespace degenlab
