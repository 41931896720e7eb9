#include "degenlab/catalog.hpp"

#include <cctype>

#include "catalog_manifest.hpp"

namespace degenlab {

using nlohmann::json;

// ------------------------------------------------------------ int expressions

namespace {

class IntExprParser {
 public:
  IntExprParser(std::string_view s, const std::map<std::string, long>& vars) : s_(s), vars_(vars) {}

  long parse() {
    long v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view s_;
  const std::map<std::string, long>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("integer expression '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long expr() {
    long v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  long term() {
    long v = unary();
    while (eat('*')) v *= unary();
    return v;
  }
  long unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  long primary() {
    skip();
    if (eat('(')) {
      long v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = 10 * v + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id(s_.substr(b, pos_ - b));
      auto it = vars_.find(id);
      if (it == vars_.end()) fail("unbound variable '" + id + "'");
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

long eval_int_expr(std::string_view expr, const std::map<std::string, long>& vars) {
  return IntExprParser(expr, vars).parse();
}

// ------------------------------------------------------------------ manifest

namespace {

const json& manifest() {
  static const json m = json::parse(detail::kCatalogJson);
  return m;
}

const json* find_family(std::string_view family) {
  for (const auto& f : manifest()["families"])
    if (f["name"].get<std::string>() == family) return &f;
  return nullptr;
}

bool has_param(const json& f) { return f.contains("param"); }

const json& family_or_throw(const CatalogName& name) {
  const json* f = find_family(name.family);
  if (!f) throw UnknownKind("unknown family '" + name.family + "'");
  if (has_param(*f) != name.param.has_value())
    throw UnknownKind("family '" + name.family + "' parameter mismatch");
  if (name.param) {
    int lo = (*f)["param"]["min"].get<int>(), hi = (*f)["param"]["max"].get<int>();
    if (*name.param < lo || *name.param > hi)
      throw UnknownKind(name.to_string() + ": parameter outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return *f;
}

std::map<std::string, long> vars_for(const CatalogName& name, std::size_t n) {
  std::map<std::string, long> v{{"n", static_cast<long>(n)}};
  if (name.param) v["m"] = *name.param;
  return v;
}

long eval_json_int(const json& j, const std::map<std::string, long>& vars) {
  if (j.is_number_integer()) return j.get<long>();
  return eval_int_expr(j.get<std::string>(), vars);
}

Level level_value(const json& j, const std::map<std::string, long>& vars) {
  if (j.is_object()) return Level{j["at_least"].get<int>(), true};
  return Level{static_cast<int>(eval_json_int(j, vars)), false};
}

// First entry whose filters (m, from, to) accept the instance.
Level pick_level(const json& spec, const std::map<std::string, long>& vars) {
  if (!spec.is_array()) return level_value(spec, vars);
  long n = vars.at("n");
  for (const auto& e : spec) {
    if (e.contains("m") && (!vars.count("m") || vars.at("m") != e["m"].get<long>())) continue;
    if (e.contains("from") && n < eval_json_int(e["from"], vars)) continue;
    if (e.contains("to") && n > eval_json_int(e["to"], vars)) continue;
    return level_value(e["level"], vars);
  }
  throw Error("no level entry matches");
}

const std::map<std::string, std::string>& partition_aliases() {
  static const std::map<std::string, std::string> m{
      {"2", "n3"},       {"3", "T3"},       {"2,2", "T22"},     {"2,2,2", "T222"},
      {"2,2,2,2", "T2222"}, {"2,2,2,2,2", "T22222"}, {"4", "T4"}, {"3,2", "T32"},
      {"3,3", "T33"},    {"3,2,2", "T322"}};
  return m;
}

}  // namespace

// --------------------------------------------------------------- CatalogName

CatalogName CatalogName::parse(std::string_view text) {
  std::string s(text);
  if (s.size() > 3 && s.rfind("T(", 0) == 0 && s.back() == ')') {
    auto it = partition_aliases().find(s.substr(2, s.size() - 3));
    if (it == partition_aliases().end()) throw UnknownKind("no catalog family for partition " + s);
    return {it->second, std::nullopt};
  }
  CatalogName name;
  if (auto lp = s.find('('); lp != std::string::npos) {
    if (s.back() != ')') throw UnknownKind("malformed catalog name '" + s + "'");
    name.family = s.substr(0, lp);
    try {
      name.param = std::stoi(s.substr(lp + 1, s.size() - lp - 2));
    } catch (const std::exception&) {
      throw UnknownKind("malformed parameter in '" + s + "'");
    }
  } else if (find_family(s)) {
    name.family = s;
  } else {
    std::size_t d = s.size();
    while (d > 0 && std::isdigit(static_cast<unsigned char>(s[d - 1]))) --d;
    if (d == s.size() || d == 0) throw UnknownKind("unknown catalog name '" + s + "'");
    name.family = s.substr(0, d);
    name.param = std::stoi(s.substr(d));
  }
  family_or_throw(name);
  return name;
}

std::string CatalogName::to_string() const {
  return param ? family + "(" + std::to_string(*param) + ")" : family;
}

std::string Level::to_string() const { return at_least ? ">=" + std::to_string(value) : std::to_string(value); }

// ------------------------------------------------------------------- queries

std::vector<CatalogName> catalog_entries() {
  std::vector<CatalogName> out;
  for (const auto& f : manifest()["families"]) {
    std::string fam = f["name"].get<std::string>();
    if (!has_param(f)) {
      out.push_back({fam, std::nullopt});
      continue;
    }
    for (int m = f["param"]["min"].get<int>(); m <= f["param"]["max"].get<int>(); ++m) out.push_back({fam, m});
  }
  return out;
}

std::string display_name(const CatalogName& name) {
  std::string d = family_or_throw(name)["display"].get<std::string>();
  return name.param ? d + " [m=" + std::to_string(*name.param) + "]" : d;
}

std::string family_group(const CatalogName& name) { return family_or_throw(name)["group"].get<std::string>(); }

std::size_t min_dim(const CatalogName& name) {
  return static_cast<std::size_t>(eval_json_int(family_or_throw(name)["min_dim"], vars_for(name, 0)));
}

std::optional<std::size_t> max_dim(const CatalogName& name) {
  const json& f = family_or_throw(name);
  if (!f.contains("max_dim")) return std::nullopt;
  return static_cast<std::size_t>(eval_json_int(f["max_dim"], vars_for(name, 0)));
}

std::vector<std::size_t> tested_dims(const CatalogName& name) {
  std::size_t lo = min_dim(name);
  auto hi = max_dim(name);
  std::vector<std::size_t> d{lo};
  if (!hi || *hi > lo) d.push_back(lo + 1);
  return d;
}

StructureTensor instantiate(const CatalogName& name, std::size_t n) {
  const json& f = family_or_throw(name);
  std::size_t lo = min_dim(name);
  auto hi = max_dim(name);
  if (n < lo || (hi && n > *hi))
    throw DimensionOutOfRange(name.to_string() + " needs " + std::to_string(lo) +
                              (hi ? " <= n <= " + std::to_string(*hi) : " <= n") + ", got n = " + std::to_string(n));
  auto vars = vars_for(name, n);
  StructureTensor a(n);
  auto add = [&](const json& p, const std::map<std::string, long>& v) {
    long i = eval_json_int(p["i"], v), j = eval_json_int(p["j"], v), k = eval_json_int(p["k"], v);
    long c = p.contains("c") ? eval_json_int(p["c"], v) : 1;
    long sn = static_cast<long>(n);
    if (i < 1 || j < 1 || k < 1 || i > sn || j > sn || k > sn || i == j)
      throw Error(name.to_string() + ": product index out of range at n = " + std::to_string(n));
    a.add_term(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1),
               Rational(c));
  };
  for (const auto& p : f["products"]) {
    if (!p.contains("for")) {
      add(p, vars);
      continue;
    }
    const auto& loop = p["for"];
    std::string var = loop[0].get<std::string>();
    long from = eval_json_int(loop[1], vars), to = eval_json_int(loop[2], vars);
    for (long s = from; s <= to; ++s) {
      auto v = vars;
      v[var] = s;
      add(p, v);
    }
  }
  return a;
}

LevelInfo level_lookup(const CatalogName& name, std::size_t n) {
  const json& f = family_or_throw(name);
  std::size_t lo = min_dim(name);
  auto hi = max_dim(name);
  if (n < lo || (hi && n > *hi)) throw DimensionOutOfRange(name.to_string() + " at n = " + std::to_string(n));
  auto vars = vars_for(name, n);
  return {pick_level(f["levels"], vars), pick_level(f["infinite_level"], vars)};
}

Partition expected_iw_max(const CatalogName& name) {
  const json& f = family_or_throw(name);
  Partition p;
  if (f.contains("iw_max_twos")) {
    long k = eval_json_int(f["iw_max_twos"], vars_for(name, 0));
    p.parts.assign(static_cast<std::size_t>(k), 2);
  } else if (!f["iw_max"].empty() && f["iw_max"][0].is_object()) {
    for (const auto& e : f["iw_max"]) {
      if (e.contains("m") && (!name.param || *name.param != e["m"].get<int>())) continue;
      p.parts = e["parts"].get<std::vector<int>>();
      break;
    }
  } else {
    p.parts = f["iw_max"].get<std::vector<int>>();
  }
  return p;
}

// ----------------------------------------------------------------- skew pairs

StructureTensor build_skew_pair_algebra(const QMatrix& b1, const QMatrix& b2) {
  const std::size_t u = b1.rows();
  if (b1.cols() != u || b2.rows() != u || b2.cols() != u) throw DimensionMismatch("skew forms must be square and equal size");
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (b1(i, j) != -b1(j, i) || b2(i, j) != -b2(j, i)) throw NotSkew("form is not skew-symmetric");
  QMatrix stacked(2, u * u);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j) {
      stacked(0, i * u + j) = b1(i, j);
      stacked(1, i * u + j) = b2(i, j);
    }
  if (rank(stacked) < 2) throw NotSurjective("the two forms are linearly dependent");
  const std::size_t n = u + 2;
  StructureTensor a(n);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = i + 1; j < u; ++j) {
      if (sgn(b1(i, j)) != 0) a.add_term(i, j, n - 2, b1(i, j));
      if (sgn(b2(i, j)) != 0) a.add_term(i, j, n - 1, b2(i, j));
    }
  return a;
}

}  // namespace degenlab
