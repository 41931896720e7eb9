// degenlab: catalog queries, certificate checks and the full ledger run.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "degenlab/catalog.hpp"
#include "degenlab/contraction.hpp"
#include "degenlab/degeneration.hpp"
#include "degenlab/ledger.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace degenlab;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

// Exit codes of `check`.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitFail = 2;
constexpr int kExitNotFound = 3;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

json verdict_json(const Verdict& v) {
  json out{{"verdict", to_string(v.kind)}, {"detail", v.detail}};
  if (v.counterexample) out["counterexample"] = matrix_json(*v.counterexample);
  return out;
}

// An argument naming an algebra: a catalog name with --dim, or an algebra JSON file.
struct AlgebraArg {
  std::string text;
  std::size_t dim = 0;

  bool is_file() const { return text.ends_with(".json"); }
  StructureTensor build() const {
    if (is_file()) return algebra_from_json(read_json(text));
    if (dim == 0) throw DimensionOutOfRange("--dim is required for catalog names");
    return instantiate(CatalogName::parse(text), dim);
  }
};

void print(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_info(const AlgebraArg& arg, bool as_json) {
  CatalogName name = CatalogName::parse(arg.text);
  StructureTensor a = instantiate(name, arg.dim);
  const std::size_t n = a.dim();
  auto nil = is_nilpotent(a);
  auto flags = identity_flags(a);
  auto engel = engel_degree(a, n);
  auto iw = iw_max(a, kDefaultSeed, 200);
  LevelInfo lev = level_lookup(name, n);

  json j{{"name", name.to_string()},
         {"display", display_name(name)},
         {"dim", n},
         {"dim_square", square(a).dim()},
         {"dim_ann", annihilator(a).dim()},
         {"nilpotency_index", nil.index ? json(*nil.index) : json(nullptr)},
         {"engel_degree", engel ? json(*engel) : json(nullptr)},
         {"jacobi", flags.jacobi},
         {"malcev", flags.malcev},
         {"iw_max", iw.partition.label().to_string()},
         {"level", lev.level.to_string()},
         {"infinite_level", lev.infinite_level.to_string()},
         {"products", multiplication_table(a)}};

  std::ostringstream s;
  s << display_name(name) << " in dimension " << n << "\n"
    << "  products          " << multiplication_table(a) << "\n"
    << "  dim A^2           " << square(a).dim() << "\n"
    << "  dim Ann           " << annihilator(a).dim() << "\n"
    << "  nilpotency index  " << (nil.index ? std::to_string(*nil.index) : "not nilpotent") << "\n"
    << "  engel degree      " << (engel ? std::to_string(*engel) : "> " + std::to_string(n)) << "\n"
    << "  jacobi            " << (flags.jacobi ? "true" : "false") << "\n"
    << "  malcev            " << (flags.malcev ? "true" : "false") << "\n"
    << "  iw_max            " << iw.partition.label().to_string() << "\n"
    << "  level             " << lev.level.to_string() << "\n"
    << "  infinite level    " << lev.infinite_level.to_string() << "\n";
  print(j, as_json, s.str());
  return 0;
}

int exit_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::pass:
    case VerdictKind::proved:
      return kExitOk;
    case VerdictKind::refutation_not_found:
      return kExitNotFound;
    default:
      return kExitFail;
  }
}

// A certificate side may carry an inline "algebra" that replaces the catalog entry.
StructureTensor side_algebra(const json& file, const char* key, const AlgebraRef& ref) {
  const json& s = file.at(key);
  if (s.is_object() && s.contains("algebra")) {
    StructureTensor a = algebra_from_json(s["algebra"]);
    if (a.dim() != ref.dim) throw ParseError(std::string(key) + " algebra has the wrong dimension");
    return a;
  }
  return ref.build();
}

int cmd_check(const std::string& path, std::uint64_t seed, std::size_t trials, bool as_json) {
  json file = read_json(path);
  Verdict v;
  json out{{"file", path}};
  if (file.contains("kind")) {
    auto ws = parse_witnesses(file);
    if (ws.size() != 1) throw ParseError("a witness file describes exactly one dimension");
    const auto& w = ws.front();
    v = verify_nondegeneration(w, {trials, seed});
    out["claim"] = to_string(w.kind) + ": " + w.source.to_string() + " -/-> " + w.target.to_string();
  } else {
    auto cs = parse_certificates(file);
    if (cs.size() != 1) throw ParseError("a certificate file describes exactly one dimension");
    const auto& c = cs.front();
    StructureTensor src = side_algebra(file, "source", c.source);
    StructureTensor tgt = side_algebra(file, "target", c.target);
    try {
      v = verify_degeneration(src, tgt, parse_basis(c.basis, c.source.dim, certificate_vars(c.source, c.target)));
    } catch (const SingularFamily& e) {
      v = {VerdictKind::fail, e.what(), std::nullopt};
    }
    out["claim"] = c.source.to_string() + " -> " + c.target.to_string();
  }
  out.update(verdict_json(v));
  print(out, as_json, out["claim"].get<std::string>() + ": " + to_string(v.kind) +
                          (v.detail.empty() ? "" : " (" + v.detail + ")") + "\n");
  return exit_for(v.kind);
}

int cmd_verify_paper(const std::vector<std::size_t>& dims, std::uint64_t seed, std::size_t trials,
                     const std::string& out_dir, bool as_json) {
  ClaimLedger ledger = load_ledger(default_ledger_path());
  Report r = run_ledger(ledger, {seed, trials, dims});

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::ios_base::failure("cannot create " + out_dir + ": " + ec.message());
  auto write = [&](const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
    if (!f) throw std::ios_base::failure("cannot write " + p.string());
  };
  write(fs::path(out_dir) / "report.json", r.json.dump(2) + "\n");
  for (const auto& [n, dot] : r.dot) write(fs::path(out_dir) / ("degenerations_n" + std::to_string(n) + ".dot"), dot);

  const json& s = r.json["summary"];
  std::ostringstream t;
  t << "verified certificates  " << s["verified_certificates"] << "\n"
    << "proved witnesses       " << s["proved_witnesses"] << "\n"
    << "falsification only     " << s["falsification_only"] << "\n"
    << "verified chains        " << s["verified_chains"] << "\n"
    << "monotone audit         " << r.json["monotone_audit"]["status"].get<std::string>() << "\n"
    << "fails                  " << s["fails"] << "\n"
    << "report written to " << out_dir << "\n";
  print(s, as_json, t.str());
  return r.fails == 0 ? 0 : kExitFail;
}

int cmd_catalog_list(bool as_json) {
  json all = json::array();
  std::ostringstream t;
  for (const auto& name : catalog_entries()) {
    auto dims = tested_dims(name);
    LevelInfo lev = level_lookup(name, dims.front());
    auto hi = max_dim(name);
    json e{{"name", name.to_string()},
           {"display", display_name(name)},
           {"group", family_group(name)},
           {"min_dim", min_dim(name)},
           {"max_dim", hi ? json(*hi) : json(nullptr)},
           {"level_at_min_dim", lev.level.to_string()},
           {"iw_max", expected_iw_max(name).to_string()}};
    t << std::left << std::setw(22) << name.to_string() << " n>=" << std::setw(3) << min_dim(name)
      << " level " << std::setw(4) << lev.level.to_string() << " iw " << std::setw(10)
      << expected_iw_max(name).to_string() << " " << display_name(name) << "\n";
    all.push_back(std::move(e));
  }
  print(all, as_json, t.str());
  return 0;
}

int cmd_iwmax(const AlgebraArg& arg, std::uint64_t seed, std::size_t trials, bool as_json) {
  StructureTensor a = arg.build();
  IwMax r = iw_max(a, seed, trials);
  json w = json::array();
  for (const auto& c : r.witness) w.push_back(c.get_str());
  json j{{"partition", r.partition.label().to_string()},
         {"jordan_type", r.partition.to_string()},
         {"ranks", r.ranks.ranks},
         {"witness", w}};
  print(j, as_json, "iw_max " + r.partition.label().to_string() + " ranks " + r.ranks.to_string() + "\n");
  return 0;
}

int cmd_classify(const AlgebraArg& arg, bool as_json) {
  Classification c = classify_T22(arg.build());
  print(json{{"classification", c.to_string()}}, as_json, c.to_string() + "\n");
  return 0;
}

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> dims;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      dims.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw ParseError("--dims expects a comma-separated list of integers");
    }
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of degenerations between anticommutative Engel algebras"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 1000;
  std::size_t dim = 0;
  bool as_json = false;
  std::string target, dims_text, out_dir = "verify-report";

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "machine-readable output");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed")->capture_default_str();
    sub->add_option("--trials", trials, "sampling budget")->capture_default_str()->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "invariants and level of a catalog algebra");
  info->add_option("name", target, "catalog name, e.g. T32_e23 or eta(3)")->required();
  info->add_option("--dim", dim, "dimension")->required();
  common(info);

  auto* check = app.add_subcommand("check", "verify one certificate or witness file");
  check->add_option("path", target, "certificate or witness JSON")->required();
  sampling(check);
  common(check);

  auto* verify = app.add_subcommand("verify-paper", "run the shipped ledger and write reports");
  verify->add_option("--dims", dims_text, "comma-separated dimensions (default: all)");
  verify->add_option("--out", out_dir, "output directory")->capture_default_str();
  sampling(verify);
  common(verify);

  auto* catalog = app.add_subcommand("catalog", "catalog queries");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list every catalog entry");
  common(list);

  auto* iwmax = app.add_subcommand("iwmax", "maximal one-dimensional contraction");
  iwmax->add_option("algebra", target, "catalog name or algebra JSON file")->required();
  iwmax->add_option("--dim", dim, "dimension for catalog names");
  sampling(iwmax);
  common(iwmax);

  auto* classify = app.add_subcommand("classify", "name an algebra whose maximal contraction is T(2,2)");
  classify->add_option("algebra", target, "catalog name or algebra JSON file")->required();
  classify->add_option("--dim", dim, "dimension for catalog names");
  common(classify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info({target, dim}, as_json);
    if (*check) return cmd_check(target, seed, trials, as_json);
    if (*verify) return cmd_verify_paper(parse_dims(dims_text), seed, trials, out_dir, as_json);
    if (*list) return cmd_catalog_list(as_json);
    if (*iwmax) return cmd_iwmax({target, dim}, seed, trials, as_json);
    if (*classify) return cmd_classify({target, dim}, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InconsistentLedger& e) {
    std::cerr << "error: inconsistent ledger: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitIo;
}
