#include "degenlab/ledger.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "degenlab/contraction.hpp"

namespace degenlab {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError("ledger: " + what); }

CatalogName parse_name(const json& j) {
  if (!j.is_string()) parse_fail("expected a catalog name, got " + j.dump());
  try {
    return CatalogName::parse(j.get<std::string>());
  } catch (const UnknownKind& e) {
    parse_fail(e.what());
  }
}

// (name, dims) from {"source": {"name", "dim"}} or {"source": "name", "dims": [...]}.
std::pair<CatalogName, std::vector<std::size_t>> side(const json& entry, const char* key) {
  if (!entry.contains(key)) parse_fail(std::string("missing '") + key + "' in " + entry.dump());
  const json& s = entry[key];
  if (s.is_object()) return {parse_name(s.at("name")), {s.at("dim").get<std::size_t>()}};
  if (!entry.contains("dims")) parse_fail("missing 'dims' in " + entry.dump());
  return {parse_name(s), entry["dims"].get<std::vector<std::size_t>>()};
}

void check_dim(const CatalogName& name, std::size_t n) {
  auto hi = max_dim(name);
  if (n < min_dim(name) || (hi && n > *hi))
    throw InconsistentLedger(name.to_string() + " is not defined in dimension " + std::to_string(n));
}

std::map<std::string, long> vars_of(const CatalogName& a, const CatalogName& b, std::size_t n) {
  return certificate_vars({a, n}, {b, n});
}

std::vector<std::string> strings(const json& j) {
  if (!j.is_array()) parse_fail("expected an array of strings, got " + j.dump());
  return j.get<std::vector<std::string>>();
}

std::size_t int_field(const json& j, std::size_t n) {
  if (j.is_number_integer()) return j.get<std::size_t>();
  return static_cast<std::size_t>(eval_int_expr(j.get<std::string>(), {{"n", static_cast<long>(n)}}));
}

QMatrix constant_basis(const std::vector<std::string>& rows, std::size_t n, const std::map<std::string, long>& vars) {
  ParameterizedBasis e = parse_basis(rows, n, vars);
  QMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!e(i, j).is_constant()) parse_fail("witness basis rows must not depend on t");
      q(i, j) = e(i, j).num().coeff(0);
    }
  return q;
}

std::string ref_key(const CatalogName& a, const CatalogName& b, std::size_t n) {
  return a.to_string() + ">" + b.to_string() + "@" + std::to_string(n);
}

}  // namespace

std::vector<DegenerationCertificate> parse_certificates(const json& j) {
  auto [src, dims] = side(j, "source");
  auto [tgt, tdims] = side(j, "target");
  if (j["source"].is_object() && tdims != dims) parse_fail("source and target dimensions differ");
  std::vector<DegenerationCertificate> out;
  for (std::size_t n : dims) {
    DegenerationCertificate c;
    c.source = {src, n};
    c.target = {tgt, n};
    c.basis = strings(j.at("basis"));
    c.provenance = j.value("provenance", "");
    c.isomorphism = j.value("isomorphism", false);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<NonDegenerationWitness> parse_witnesses(const json& j) {
  auto [src, dims] = side(j, "source");
  auto [tgt, tdims] = side(j, "target");
  WitnessKind kind;
  try {
    kind = parse_witness_kind(j.at("kind").get<std::string>());
  } catch (const UnknownKind& e) {
    parse_fail(e.what());
  }
  std::vector<NonDegenerationWitness> out;
  for (std::size_t n : dims) {
    NonDegenerationWitness w;
    w.kind = kind;
    w.source = {src, n};
    w.target = {tgt, n};
    w.subscript = j.value("subscript", "");
    w.provenance = j.value("provenance", "");
    auto vars = vars_of(src, tgt, n);
    try {
      if (j.contains("triples")) {
        ClosedSetSpec spec;
        spec.dim = n;
        for (const auto& t : j["triples"]) {
          if (!t.is_array() || t.size() != 3) parse_fail("a triple needs three entries");
          spec.triples.push_back({int_field(t[0], n), int_field(t[1], n), int_field(t[2], n)});
        }
        w.closed_set = spec;
      }
      if (j.contains("source_basis")) w.source_basis = constant_basis(strings(j["source_basis"]), n, vars);
      if (j.contains("element")) w.element = parse_vector(j["element"].get<std::string>(), n, vars);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      parse_fail(e.what());
    }
    if (kind == WitnessKind::ClosedSet && !w.closed_set) parse_fail("ClosedSet witness without triples");
    if (kind == WitnessKind::IWDominance && !w.element) parse_fail("IWDominance witness without element");
    out.push_back(std::move(w));
  }
  return out;
}

ClaimLedger parse_ledger(const json& j) {
  if (!j.is_object()) parse_fail("top level must be an object");
  ClaimLedger l;
  // Certificate templates by name pair, for instantiating chain edges.
  std::map<std::pair<std::string, std::string>, const json*> templates;
  std::set<std::string> have;
  const json none = json::array();
  auto section = [&](const char* key) -> const json& { return j.contains(key) ? j[key] : none; };
  try {
    for (const auto& c : section("certificates")) {
      for (auto& cert : parse_certificates(c)) {
        check_dim(cert.source.name, cert.source.dim);
        check_dim(cert.target.name, cert.target.dim);
        have.insert(ref_key(cert.source.name, cert.target.name, cert.source.dim));
        templates[{cert.source.name.to_string(), cert.target.name.to_string()}] = &c;
        l.certificates.push_back(std::move(cert));
      }
    }
    for (const auto& w : section("witnesses"))
      for (auto& wit : parse_witnesses(w)) {
        check_dim(wit.source.name, wit.source.dim);
        check_dim(wit.target.name, wit.target.dim);
        l.witnesses.push_back(std::move(wit));
      }
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }

  auto edge_template = [&](const CatalogName& a, const CatalogName& b) -> const json* {
    auto it = templates.find({a.to_string(), b.to_string()});
    return it == templates.end() ? nullptr : it->second;
  };
  auto require_edge = [&](const CatalogName& a, const CatalogName& b, std::size_t n, const std::string& where) {
    if (have.count(ref_key(a, b, n))) return;
    const json* t = edge_template(a, b);
    if (!t || (*t)["source"].is_object())
      throw InconsistentLedger(where + ": no certificate for " + a.to_string() + " -> " + b.to_string());
    check_dim(a, n);
    check_dim(b, n);
    DegenerationCertificate c;
    c.source = {a, n};
    c.target = {b, n};
    c.basis = strings((*t)["basis"]);
    c.provenance = t->value("provenance", "");
    c.isomorphism = t->value("isomorphism", false);
    have.insert(ref_key(a, b, n));
    l.certificates.push_back(std::move(c));
  };

  const CatalogName zero{"zero", std::nullopt};
  for (const auto& c : section("chains")) {
    ChainSpec ch;
    ch.algebra = {parse_name(c.at("algebra")), c.at("dim").get<std::size_t>()};
    ch.expected_level = c.at("expected_level").get<int>();
    for (const auto& p : c.at("path")) ch.path.push_back(parse_name(p));
    std::string where = "chain from " + ch.algebra.to_string();
    if (ch.path.empty() || !(ch.path.front() == ch.algebra.name)) throw InconsistentLedger(where + ": path must start at the algebra");
    if (!(ch.path.back() == zero)) throw InconsistentLedger(where + ": path must end at the zero algebra");
    if (static_cast<int>(ch.path.size()) - 1 != ch.expected_level)
      throw InconsistentLedger(where + ": length differs from expected_level");
    Level lev = level_lookup(ch.algebra.name, ch.algebra.dim).level;
    if (lev.at_least || lev.value != ch.expected_level)
      throw InconsistentLedger(where + ": expected_level differs from the level table (" + lev.to_string() + ")");
    for (std::size_t k = 0; k + 1 < ch.path.size(); ++k) {
      require_edge(ch.path[k], ch.path[k + 1], ch.algebra.dim, where);
      if (edge_template(ch.path[k], ch.path[k + 1])->value("isomorphism", false))
        throw InconsistentLedger(where + ": edge " + ch.path[k].to_string() + " -> " + ch.path[k + 1].to_string() +
                                 " is an isomorphism");
    }
    l.chains.push_back(std::move(ch));
  }
  for (const auto& c : section("composed")) {
    for (std::size_t n : c.at("dims").get<std::vector<std::size_t>>()) {
      ComposedEdge e;
      e.dim = n;
      for (const auto& p : c.at("path")) e.path.push_back(parse_name(p));
      e.provenance = c.value("provenance", "");
      if (e.path.size() < 3) throw InconsistentLedger("a composed edge needs an intermediate algebra");
      for (std::size_t k = 0; k + 1 < e.path.size(); ++k) require_edge(e.path[k], e.path[k + 1], n, "composed edge");
      l.composed.push_back(std::move(e));
    }
  }

  for (const auto& w : l.witnesses)
    if (have.count(ref_key(w.source.name, w.target.name, w.source.dim)))
      throw InconsistentLedger("certificate and witness both claim " + w.source.to_string() + " vs " +
                               w.target.to_string());
  return l;
}

ClaimLedger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ledger '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("ledger '" + path + "': " + e.what());
  }
  return parse_ledger(j);
}

std::string default_ledger_path() {
  if (const char* env = std::getenv("DEGENLAB_LEDGER"); env && *env) return env;
  return std::string(DEGENLAB_DATA_DIR) + "/ledger.json";
}

// -------------------------------------------------------------------- runner

namespace {

// Runs f(0..count-1) on a small pool; results are stored by index.
template <class F>
void parallel_for(std::size_t count, F f) {
  std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min<std::size_t>(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) f(i);
    });
  for (auto& t : pool) t.join();
}

struct Invariants {
  std::size_t square = 0, ann = 0, der = 0;
  RankSequence iw;
};

bool wanted(const RunOptions& o, std::size_t n) {
  return o.dims.empty() || std::find(o.dims.begin(), o.dims.end(), n) != o.dims.end();
}

std::string dot_id(const CatalogName& c) { return "\"" + c.to_string() + "\""; }

}  // namespace

Report run_ledger(const ClaimLedger& ledger, const RunOptions& options) {
  // Invariants of every algebra a certificate touches.
  std::vector<std::string> keys;
  std::map<std::string, AlgebraRef> refs;
  for (const auto& c : ledger.certificates) {
    if (!wanted(options, c.source.dim)) continue;
    for (const auto& r : {c.source, c.target}) refs.emplace(r.to_string(), r);
  }
  for (const auto& [k, r] : refs) keys.push_back(k);
  std::vector<Invariants> inv(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) {
    StructureTensor a = refs.at(keys[i]).build();
    inv[i] = {square(a).dim(), annihilator(a).dim(), derivation_dim(a), iw_max(a, options.seed, 200).ranks};
  });
  auto invariants = [&](const AlgebraRef& r) -> const Invariants& {
    return inv[std::lower_bound(keys.begin(), keys.end(), r.to_string()) - keys.begin()];
  };

  Report report;
  json& out = report.json;
  out["seed"] = options.seed;
  out["trials"] = options.trials;

  // Certificates.
  std::vector<Verdict> cv(ledger.certificates.size());
  parallel_for(cv.size(), [&](std::size_t i) {
    if (wanted(options, ledger.certificates[i].source.dim)) cv[i] = verify_certificate(ledger.certificates[i]);
  });
  std::set<std::string> passed;  // "src>tgt@n" for verified non-isomorphism certificates
  json certs = json::array(), audit = json::array();
  std::size_t verified = 0;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    const auto& c = ledger.certificates[i];
    if (!wanted(options, c.source.dim)) continue;
    json e{{"index", i},           {"source", c.source.name.to_string()}, {"target", c.target.name.to_string()},
           {"dim", c.source.dim}, {"isomorphism", c.isomorphism},          {"provenance", c.provenance}};
    bool ok = cv[i].kind == VerdictKind::pass;
    std::string detail = cv[i].detail;
    if (ok) {
      const Invariants &s = invariants(c.source), &t = invariants(c.target);
      e["orbit_dims"] = {c.source.dim * c.source.dim - s.der, c.target.dim * c.target.dim - t.der};
      bool strict = t.der > s.der;
      if (c.isomorphism ? s.der != t.der : !strict) {
        ok = false;
        detail = c.isomorphism ? "flagged as an isomorphism but the orbit dimensions differ"
                               : "limit has the same orbit dimension: the degeneration is trivial";
      }
      std::vector<std::string> broken;
      if (s.square < t.square) broken.push_back("dim A^2 increases");
      if (s.ann > t.ann) broken.push_back("dim Ann decreases");
      if (!dominates(s.iw, t.iw)) broken.push_back("iw_max rank sequence not dominated");
      for (const auto& b : broken) {
        audit.push_back({{"certificate", i}, {"violation", b}});
        ok = false;
        detail = b;
      }
    }
    e["status"] = ok ? "VERIFIED-CERTIFICATE" : "FAIL";
    if (!detail.empty()) e["detail"] = detail;
    if (ok) {
      ++verified;
      if (!c.isomorphism) passed.insert(ref_key(c.source.name, c.target.name, c.source.dim));
    } else {
      ++report.fails;
    }
    certs.push_back(std::move(e));
  }
  out["certificates"] = std::move(certs);
  out["monotone_audit"] = {{"violations", audit}, {"status", audit.empty() ? "PASS" : "FAIL"}};

  // Witnesses.
  std::vector<Verdict> wv(ledger.witnesses.size());
  parallel_for(wv.size(), [&](std::size_t i) {
    const auto& w = ledger.witnesses[i];
    if (!wanted(options, w.source.dim)) return;
    try {
      wv[i] = verify_nondegeneration(w, {options.trials, options.seed});
    } catch (const Error& ex) {
      wv[i] = {VerdictKind::fail, ex.what(), std::nullopt};
    }
  });
  json wits = json::array();
  std::size_t proved = 0, falsification = 0;
  for (std::size_t i = 0; i < wv.size(); ++i) {
    const auto& w = ledger.witnesses[i];
    if (!wanted(options, w.source.dim)) continue;
    std::string status = "FAIL";
    if (wv[i].kind == VerdictKind::proved) {
      status = "PROVED";
      ++proved;
    } else if (wv[i].kind == VerdictKind::refutation_not_found) {
      status = "FALSIFICATION-ONLY";
      ++falsification;
    } else {
      ++report.fails;
    }
    json e{{"index", i},
           {"kind", to_string(w.kind)},
           {"source", w.source.name.to_string()},
           {"target", w.target.name.to_string()},
           {"dim", w.source.dim},
           {"subscript", w.subscript},
           {"verdict", to_string(wv[i].kind)},
           {"status", status},
           {"detail", wv[i].detail},
           {"provenance", w.provenance}};
    if (w.closed_set) e["triples"] = w.closed_set->to_string();
    wits.push_back(std::move(e));
  }
  out["witnesses"] = std::move(wits);

  // Chains: lower bounds verified here, upper bounds asserted by the level tables.
  json chains = json::array();
  std::size_t chain_ok = 0;
  for (std::size_t i = 0; i < ledger.chains.size(); ++i) {
    const auto& ch = ledger.chains[i];
    if (!wanted(options, ch.algebra.dim)) continue;
    bool ok = true;
    json path = json::array();
    for (std::size_t k = 0; k < ch.path.size(); ++k) {
      path.push_back(ch.path[k].to_string());
      if (k + 1 < ch.path.size() && !passed.count(ref_key(ch.path[k], ch.path[k + 1], ch.algebra.dim))) ok = false;
    }
    ok ? ++chain_ok : ++report.fails;
    chains.push_back({{"algebra", ch.algebra.name.to_string()},
                      {"dim", ch.algebra.dim},
                      {"expected_level", ch.expected_level},
                      {"length", ch.path.size() - 1},
                      {"path", path},
                      {"lower_bound", ok ? "VERIFIED-CHAIN" : "FAIL"},
                      {"upper_bound", "ASSERTED-UNCHECKED"}});
  }
  out["chains"] = std::move(chains);

  // Composed edges must not contradict a proved witness.
  std::set<std::string> refuted_pairs;
  for (std::size_t i = 0; i < wv.size(); ++i)
    if (wv[i].kind == VerdictKind::proved)
      refuted_pairs.insert(ref_key(ledger.witnesses[i].source.name, ledger.witnesses[i].target.name,
                                   ledger.witnesses[i].source.dim));
  json composed = json::array();
  for (const auto& e : ledger.composed) {
    if (!wanted(options, e.dim)) continue;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < e.path.size(); ++k)
      if (!passed.count(ref_key(e.path[k], e.path[k + 1], e.dim))) ok = false;
    if (refuted_pairs.count(ref_key(e.path.front(), e.path.back(), e.dim))) ok = false;
    if (!ok) ++report.fails;
    json path = json::array();
    for (const auto& p : e.path) path.push_back(p.to_string());
    composed.push_back({{"source", e.path.front().to_string()},
                        {"target", e.path.back().to_string()},
                        {"dim", e.dim},
                        {"via", path},
                        {"status", ok ? "COMPOSED" : "FAIL"},
                        {"provenance", e.provenance}});
  }
  out["composed"] = std::move(composed);

  out["summary"] = {{"verified_certificates", verified},
                    {"proved_witnesses", proved},
                    {"falsification_only", falsification},
                    {"verified_chains", chain_ok},
                    {"fails", report.fails}};

  // DOT graphs: solid edges are verified certificates, dashed ones are composed.
  std::map<std::size_t, std::set<std::string>> nodes;
  std::map<std::size_t, std::vector<std::string>> edges;
  for (std::size_t i = 0; i < ledger.certificates.size(); ++i) {
    const auto& c = ledger.certificates[i];
    if (!wanted(options, c.source.dim) || cv[i].kind != VerdictKind::pass) continue;
    nodes[c.source.dim].insert(dot_id(c.source.name));
    nodes[c.source.dim].insert(dot_id(c.target.name));
    edges[c.source.dim].push_back("  " + dot_id(c.source.name) + " -> " + dot_id(c.target.name) +
                                  (c.isomorphism ? " [label=\"iso\", dir=both];" : ";"));
  }
  for (const auto& e : ledger.composed) {
    if (!wanted(options, e.dim)) continue;
    nodes[e.dim].insert(dot_id(e.path.front()));
    nodes[e.dim].insert(dot_id(e.path.back()));
    edges[e.dim].push_back("  " + dot_id(e.path.front()) + " -> " + dot_id(e.path.back()) + " [style=dashed];");
  }
  for (const auto& [n, ns] : nodes) {
    std::string d = "digraph n" + std::to_string(n) + " {\n  rankdir=TB;\n";
    for (const auto& v : ns) d += "  " + v + ";\n";
    for (const auto& e : edges[n]) d += e + "\n";
    report.dot[n] = d + "}\n";
  }
  return report;
}

}  // namespace degenlab
