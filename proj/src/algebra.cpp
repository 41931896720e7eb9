#include "degenlab/algebra.hpp"

#include <algorithm>

namespace degenlab {

namespace {

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void axpy(Vector& acc, const Rational& a, const Vector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (sgn(x[k]) != 0) acc[k] += a * x[k];
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

nlohmann::json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

}  // namespace

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

void StructureTensor::set_product(std::size_t i, std::size_t j, Vector v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw DimensionMismatch("product index or length out of range");
  if (i == j) {
    if (!all_zero(v)) throw NotSkew("e_i e_i must vanish");
    return;
  }
  if (i > j) {
    std::swap(i, j);
    for (auto& x : v) x = -x;
  }
  if (all_zero(v))
    prod_.erase({i, j});
  else
    prod_[{i, j}] = std::move(v);
}

void StructureTensor::add_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (k >= dim_) throw DimensionMismatch("product target out of range");
  Vector v = basis_product(i, j);
  v[k] += c;
  set_product(i, j, std::move(v));
}

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
  if (i == j) return Vector(dim_, Rational(0));
  bool flip = i > j;
  auto it = prod_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == prod_.end()) return Vector(dim_, Rational(0));
  Vector v = it->second;
  if (flip)
    for (auto& x : v) x = -x;
  return v;
}

Rational StructureTensor::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  bool flip = i > j;
  auto it = prod_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == prod_.end()) return 0;
  return flip ? Rational(-it->second[k]) : it->second[k];
}

Vector product(const StructureTensor& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("product vector length");
  Vector r(n, Rational(0));
  for (const auto& [ij, v] : a.products()) {
    auto [i, j] = ij;
    Rational c = x[i] * y[j] - x[j] * y[i];
    axpy(r, c, v);
  }
  return r;
}

QMatrix left_mult_matrix(const StructureTensor& a, const Vector& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionMismatch("left_mult_matrix vector length");
  QMatrix m(n, n);
  for (const auto& [ij, v] : a.products()) {
    auto [i, j] = ij;
    // x e_j picks up x_i (e_i e_j); x e_i picks up x_j (e_j e_i) = -x_j v.
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(v[k]) == 0) continue;
      if (sgn(x[i]) != 0) m(k, j) += x[i] * v[k];
      if (sgn(x[j]) != 0) m(k, i) -= x[j] * v[k];
    }
  }
  return m;
}

Subspace subspace_product(const StructureTensor& a, const Subspace& u, const Subspace& w) {
  if (u.ambient() != a.dim() || w.ambient() != a.dim()) throw DimensionMismatch("subspace ambient differs from algebra");
  std::vector<Vector> vs;
  for (const auto& x : u.basis())
    for (const auto& y : w.basis()) {
      Vector p = product(a, x, y);
      if (!all_zero(p)) vs.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), vs);
}

Subspace power_ideal(const StructureTensor& a, std::size_t i) {
  Subspace full = Subspace::full(a.dim());
  Subspace cur = full;
  for (std::size_t k = 1; k < i; ++k) {
    // Anticommutativity makes A^k A = A A^k.
    cur = subspace_product(a, full, cur);
    if (cur.dim() == 0) break;
  }
  return cur;
}

Subspace square(const StructureTensor& a) { return power_ideal(a, 2); }

Subspace annihilator(const StructureTensor& a) {
  const std::size_t n = a.dim();
  // Row block i encodes x -> e_i x.
  QMatrix m(n * n, n);
  for (const auto& [ij, v] : a.products()) {
    auto [i, j] = ij;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(v[k]) == 0) continue;
      m(i * n + k, j) += v[k];
      m(j * n + k, i) -= v[k];
    }
  }
  return kernel_basis(m);
}

NilpotencyResult is_nilpotent(const StructureTensor& a) {
  Subspace full = Subspace::full(a.dim());
  Subspace cur = full;
  for (std::size_t k = 1;; ++k) {
    if (cur.dim() == 0) return {true, k};
    Subspace next = subspace_product(a, full, cur);
    if (next.dim() == cur.dim()) return {false, std::nullopt};
    cur = std::move(next);
  }
}

bool satisfies_jacobi(const StructureTensor& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
        Vector s = product(a, a.basis_product(i, j), ek);
        Vector s2 = product(a, a.basis_product(j, k), ei);
        Vector s3 = product(a, a.basis_product(k, i), ej);
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(s[c] + s2[c] + s3[c]) != 0) return false;
      }
  return true;
}

bool satisfies_malcev(const StructureTensor& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(basis_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = basis_vector(n, i);
      v[j] = 1;
      xs.push_back(std::move(v));
    }
  for (const auto& x : xs) {
    QMatrix lx = left_mult_matrix(a, x);
    for (std::size_t yi = 0; yi < n; ++yi) {
      Vector xy = lx.column(yi);
      Vector y = basis_vector(n, yi);
      for (std::size_t zi = 0; zi < n; ++zi) {
        Vector z = basis_vector(n, zi);
        Vector xz = lx.column(zi);
        Vector lhs = product(a, xy, xz);
        Vector r1 = product(a, product(a, xy, z), x);
        Vector r2 = product(a, product(a, product(a, y, z), x), x);
        Vector r3 = product(a, product(a, product(a, z, x), x), y);
        for (std::size_t c = 0; c < n; ++c)
          if (lhs[c] != r1[c] + r2[c] + r3[c]) return false;
      }
    }
  }
  return true;
}

IdentityFlags identity_flags(const StructureTensor& a) {
  IdentityFlags f;
  f.anticommutative = std::all_of(a.products().begin(), a.products().end(), [&](const auto& kv) {
    return kv.first.first < kv.first.second && kv.second.size() == a.dim();
  });
  f.jacobi = satisfies_jacobi(a);
  f.malcev = satisfies_malcev(a);
  return f;
}

std::optional<std::size_t> engel_degree(const StructureTensor& a, std::size_t max_m) {
  const std::size_t n = a.dim();
  std::vector<QMatrix> basis_ops;
  for (std::size_t i = 0; i < n; ++i) basis_ops.push_back(left_mult_matrix(a, basis_vector(n, i)));

  // words[alpha] = sum over distinct orderings of the multiset alpha (sorted
  // index list) of L_{e_w1} ... L_{e_wm}; zero entries are dropped.
  using Key = std::vector<std::size_t>;
  std::map<Key, QMatrix> prev{{Key{}, QMatrix::identity(n)}};
  std::vector<Key> prev_keys{Key{}};
  for (std::size_t m = 1; m <= max_m; ++m) {
    std::map<Key, QMatrix> cur;
    std::vector<Key> keys;
    for (const Key& base : prev_keys) {
      std::size_t start = base.empty() ? 0 : base.back();
      for (std::size_t i = start; i < n; ++i) {
        Key k = base;
        k.push_back(i);
        keys.push_back(std::move(k));
      }
    }
    bool all_vanish = true;
    for (const Key& k : keys) {
      QMatrix acc(n, n);
      bool any = false;
      for (std::size_t p = 0; p < k.size(); ++p) {
        if (p > 0 && k[p] == k[p - 1]) continue;
        Key rest = k;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
        auto it = prev.find(rest);
        if (it == prev.end()) continue;
        QMatrix term = basis_ops[k[p]] * it->second;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (sgn(term(r, c)) != 0) acc(r, c) += term(r, c);
        any = true;
      }
      if (any && !acc.is_zero()) {
        all_vanish = false;
        cur.emplace(k, std::move(acc));
      }
    }
    if (all_vanish) return m;
    prev = std::move(cur);
    prev_keys = std::move(keys);
  }
  return std::nullopt;
}

StructureTensor change_basis(const StructureTensor& a, const QMatrix& g) {
  const std::size_t n = a.dim();
  if (g.rows() != n || g.cols() != n) throw DimensionMismatch("change_basis matrix shape");
  QMatrix h = invert(g);
  StructureTensor out(n);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(h.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector p = product(a, cols[i], cols[j]);
      if (!all_zero(p)) out.set_product(i, j, mat_vec(g, p));
    }
  return out;
}

StructureTensor structure_in_basis(const StructureTensor& a, const QMatrix& rows) {
  return change_basis(a, invert(rows.transpose()));
}

StructureTensor direct_sum_trivial(const StructureTensor& a, std::size_t extra) {
  StructureTensor out(a.dim() + extra);
  for (const auto& [ij, v] : a.products()) {
    Vector w = v;
    w.resize(a.dim() + extra, Rational(0));
    out.set_product(ij.first, ij.second, std::move(w));
  }
  return out;
}

std::size_t derivation_dim(const StructureTensor& a) {
  const std::size_t n = a.dim();
  auto var = [n](std::size_t p, std::size_t q) { return p * n + q; };  // D e_q = sum_p D_pq e_p
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector mij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector eq(n * n, Rational(0));
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(mij[l]) != 0) eq[var(k, l)] += mij[l];
        for (std::size_t p = 0; p < n; ++p) {
          Rational c1 = a.coefficient(p, j, k);
          if (sgn(c1) != 0) eq[var(p, i)] -= c1;
          Rational c2 = a.coefficient(i, p, k);
          if (sgn(c2) != 0) eq[var(p, j)] -= c2;
        }
        if (!all_zero(eq)) rows.push_back(std::move(eq));
      }
    }
  if (rows.empty()) return n * n;
  QMatrix m = QMatrix::from_rows(rows, n * n);
  return n * n - rank(m);
}

nlohmann::json algebra_to_json(const StructureTensor& a) {
  nlohmann::json prods = nlohmann::json::array();
  for (const auto& [ij, v] : a.products()) {
    nlohmann::json value = nlohmann::json::array();
    for (const auto& c : v) value.push_back(rational_to_json(c));
    prods.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"value", value}});
  }
  return {{"dim", a.dim()}, {"products", prods}};
}

StructureTensor algebra_from_json(const nlohmann::json& j) {
  try {
    std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) throw ParseError("dim must be positive");
    StructureTensor a(n);
    for (const auto& p : j.value("products", nlohmann::json::array())) {
      auto i = p.at("i").get<std::size_t>(), jj = p.at("j").get<std::size_t>();
      if (i < 1 || jj < 1 || i > n || jj > n) throw ParseError("product index out of range");
      if (i >= jj) throw ParseError("products must have i < j");
      const auto& value = p.at("value");
      if (value.size() != n) throw ParseError("product value must have length dim");
      Vector v;
      for (const auto& c : value) v.push_back(rational_from_json(c));
      a.set_product(i - 1, jj - 1, std::move(v));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra JSON: ") + e.what());
  }
}

std::string multiplication_table(const StructureTensor& a) {
  std::string out;
  for (const auto& [ij, v] : a.products()) {
    if (!out.empty()) out += ", ";
    out += "e" + std::to_string(ij.first + 1) + "e" + std::to_string(ij.second + 1) + "=";
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      Rational mag = abs(v[k]);
      if (sgn(v[k]) < 0)
        out += "-";
      else if (!first)
        out += "+";
      if (mag != 1) out += mag.get_str() + "*";
      out += "e" + std::to_string(k + 1);
      first = false;
    }
  }
  return out.empty() ? "(zero product)" : out;
}

}  // namespace degenlab
