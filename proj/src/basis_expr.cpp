#include <cctype>

#include "degenlab/degeneration.hpp"

namespace degenlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(const std::string& text, const std::string& why) {
  throw ParseError("basis expression '" + text + "': " + why);
}

// Splits at '+' / '-' outside brackets; each piece keeps its sign.
std::vector<std::pair<int, std::string>> signed_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string t = trim(cur);
    if (t.empty()) fail(s, "empty term");
    out.emplace_back(sign, t);
    cur.clear();
  };
  for (std::size_t p = 0; p < s.size(); ++p) {
    char c = s[p];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (trim(cur).empty()) {
        if (c == '-') sign = -sign;
        continue;
      }
      flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

struct BasisSymbol {
  long index;       // 1-based
  std::size_t end;  // position after the symbol
};

// Reads e5, e_5, e{n-1}, e_{n-1}, e_n starting at the 'e'.
BasisSymbol read_symbol(const std::string& s, std::size_t p, const std::map<std::string, long>& vars) {
  if (p >= s.size() || s[p] != 'e') fail(s, "expected a basis symbol");
  ++p;
  if (p < s.size() && s[p] == '_') ++p;
  if (p >= s.size()) fail(s, "missing index");
  if (s[p] == '{') {
    std::size_t q = s.find('}', p);
    if (q == std::string::npos) fail(s, "missing '}'");
    return {eval_int_expr(s.substr(p + 1, q - p - 1), vars), q + 1};
  }
  std::size_t q = p;
  if (std::isdigit(static_cast<unsigned char>(s[p])))
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
  else
    while (q < s.size() && std::isalpha(static_cast<unsigned char>(s[q]))) ++q;
  if (q == p) fail(s, "bad index");
  return {eval_int_expr(s.substr(p, q - p), vars), q};
}

// Position of the basis symbol: the first 'e' outside brackets.
std::size_t symbol_pos(const std::string& s) {
  int depth = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    char c = s[p];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && c == 'e') return p;
  }
  fail(s, "no basis symbol");
}

RationalFunction coefficient(const std::string& term, std::size_t at) {
  std::string c = trim(term.substr(0, at));
  if (!c.empty() && c.back() == '*') c = trim(c.substr(0, c.size() - 1));
  if (c.empty()) return RationalFunction(1L);
  return parse_rational_function(c);
}

std::size_t checked_index(const std::string& s, long idx, std::size_t n) {
  if (idx < 1 || idx > static_cast<long>(n)) fail(s, "index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(idx - 1);
}

using RfRow = std::vector<RationalFunction>;

// One entry may expand to several rows (a range) or to a single linear combination.
std::vector<RfRow> expand_entry(const std::string& entry, std::size_t n, const std::map<std::string, long>& vars) {
  if (entry.find("..") != std::string::npos) {
    auto terms = signed_terms(entry);
    if (terms.size() != 1) fail(entry, "a range must be a single term");
    const std::string& t = terms[0].second;
    std::size_t at = symbol_pos(t);
    RationalFunction c = coefficient(t, at);
    if (terms[0].first < 0) c = -c;
    BasisSymbol lo = read_symbol(t, at, vars);
    if (t.compare(lo.end, 2, "..") != 0) fail(entry, "expected '..'");
    BasisSymbol hi = read_symbol(t, lo.end + 2, vars);
    if (hi.end != t.size()) fail(entry, "trailing input after range");
    std::vector<RfRow> rows;
    for (long k = lo.index; k <= hi.index; ++k) {
      RfRow r(n, RationalFunction(0L));
      r[checked_index(entry, k, n)] = c;
      rows.push_back(std::move(r));
    }
    return rows;
  }
  RfRow r(n, RationalFunction(0L));
  for (const auto& [sign, t] : signed_terms(entry)) {
    std::size_t at = symbol_pos(t);
    RationalFunction c = coefficient(t, at);
    BasisSymbol sym = read_symbol(t, at, vars);
    if (sym.end != t.size()) fail(entry, "trailing input after '" + t.substr(at, sym.end - at) + "'");
    std::size_t k = checked_index(entry, sym.index, n);
    r[k] = sign < 0 ? r[k] - c : r[k] + c;
  }
  return {r};
}

}  // namespace

ParameterizedBasis parse_basis(const std::vector<std::string>& rows, std::size_t n,
                               const std::map<std::string, long>& vars) {
  std::vector<RfRow> all;
  for (const auto& entry : rows)
    for (auto& r : expand_entry(entry, n, vars)) all.push_back(std::move(r));
  if (all.size() != n)
    throw DimensionMismatch("basis has " + std::to_string(all.size()) + " rows, expected " + std::to_string(n));
  ParameterizedBasis e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = all[i][j];
  return e;
}

Vector parse_vector(const std::string& expr, std::size_t n, const std::map<std::string, long>& vars) {
  auto rows = expand_entry(expr, n, vars);
  if (rows.size() != 1) throw ParseError("vector expression '" + expr + "' must be a single vector");
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!rows[0][k].is_constant()) throw ParseError("vector expression '" + expr + "' depends on t");
    v[k] = rows[0][k].num().coeff(0);
  }
  return v;
}

}  // namespace degenlab
