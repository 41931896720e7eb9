#include "doctest.h"
#include "degenlab/ledger.hpp"

using namespace degenlab;
using nlohmann::json;

namespace {

json small_ledger() {
  return json::parse(R"json({
    "certificates": [
      {"source": "n3", "target": "zero", "dims": [3], "basis": ["t*e1", "e2..e{n}"], "provenance": "derived"},
      {"source": "T22", "target": "n3", "dims": [5],
       "basis": ["e1", "e2", "t*e3", "e4..e{n-2}", "e_n", "e{n-1}"], "provenance": "derived"}
    ],
    "witnesses": [
      {"kind": "DimSquare", "source": "eta(1)", "target": "n3", "dims": [5], "subscript": "(1,1,n-1)"}
    ],
    "chains": [
      {"algebra": "T22", "dim": 5, "expected_level": 2, "path": ["T22", "n3", "zero"]}
    ]
  })json");
}

}  // namespace

TEST_CASE("a small ledger parses and chain edges are instantiated") {
  ClaimLedger l = parse_ledger(small_ledger());
  // n3 -> zero at 5 comes from the template listed at 3.
  CHECK(l.certificates.size() == 3);
  CHECK(l.chains.size() == 1);
  Report r = run_ledger(l, {});
  CHECK(r.json["chains"][0]["lower_bound"] == "VERIFIED-CHAIN");
  CHECK(r.json["witnesses"][0]["status"] == "FAIL");  // equal dim A^2 proves nothing
  CHECK(r.fails == 1);
  CHECK(r.dot.count(5) == 1);
}

TEST_CASE("inconsistent ledgers are rejected") {
  json j = small_ledger();
  j["chains"][0]["expected_level"] = 3;
  CHECK_THROWS_AS(parse_ledger(j), InconsistentLedger);

  j = small_ledger();
  j["chains"][0]["path"] = {"T22", "zero"};
  j["chains"][0]["expected_level"] = 1;
  CHECK_THROWS_AS(parse_ledger(j), InconsistentLedger);

  j = small_ledger();
  j["witnesses"].push_back({{"kind", "AnnDim"}, {"source", "T22"}, {"target", "n3"}, {"dims", {5}}});
  CHECK_THROWS_AS(parse_ledger(j), InconsistentLedger);

  j = small_ledger();
  j["certificates"][0]["dims"] = {2};
  CHECK_THROWS_AS(parse_ledger(j), InconsistentLedger);

  j = small_ledger();
  j["certificates"][0].erase("basis");
  CHECK_THROWS_AS(parse_ledger(j), ParseError);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  ClaimLedger l = load_ledger(default_ledger_path());
  RunOptions o{7, 50, {5}};
  std::string a = run_ledger(l, o).json.dump(), b = run_ledger(l, o).json.dump();
  CHECK(a == b);
}
