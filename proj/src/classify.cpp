#include <algorithm>

#include "degenlab/catalog.hpp"
#include "degenlab/contraction.hpp"

namespace degenlab {

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::name: return name->to_string();
    case Kind::level_at_least_6: return "LevelAtLeast6";
    case Kind::needs_extension: return "NeedsExtension";
  }
  return "?";
}

namespace {

// Leading index of each RREF basis vector.
std::vector<std::size_t> leading_indices(const Subspace& s) {
  std::vector<std::size_t> out;
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        out.push_back(i);
        break;
      }
  return out;
}

std::vector<std::size_t> complement_indices(const Subspace& s) {
  auto lead = leading_indices(s);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.ambient(); ++i)
    if (std::find(lead.begin(), lead.end(), i) == lead.end()) out.push_back(i);
  return out;
}

QMatrix restrict_form(const QMatrix& b, const std::vector<std::size_t>& idx) {
  QMatrix r(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t c = 0; c < idx.size(); ++c) r(a, c) = b(idx[a], idx[c]);
  return r;
}

Rational pfaffian4(const QMatrix& m, const std::array<std::size_t, 4>& i) {
  return m(i[0], i[1]) * m(i[2], i[3]) - m(i[0], i[2]) * m(i[1], i[3]) + m(i[0], i[3]) * m(i[1], i[2]);
}

// Coefficients (s^2, su, u^2) of Pf(s b1 + u b2) on four indices.
std::array<Rational, 3> pfaffian_form(const QMatrix& b1, const QMatrix& b2, const std::array<std::size_t, 4>& i) {
  QMatrix sum(b1.rows(), b1.cols());
  for (std::size_t r = 0; r < b1.rows(); ++r)
    for (std::size_t c = 0; c < b1.cols(); ++c) sum(r, c) = b1(r, c) + b2(r, c);
  Rational a = pfaffian4(b1, i), c = pfaffian4(b2, i);
  return {a, pfaffian4(sum, i) - a - c, c};
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Classification named(const char* family) { return {Classification::Kind::name, CatalogName{family, std::nullopt}}; }

}  // namespace

Classification classify_T22(const StructureTensor& a) {
  const std::size_t n = a.dim();
  IwMax iw = iw_max(a, 0x5eed, 200);
  if (!(iw.partition.label() == Partition{{2, 2}}))
    throw PreconditionViolated("maximal contraction is " + iw.partition.label().to_string() + ", not (2,2)");

  Subspace w = square(a);
  if (w.dim() == 3) return named("T22_e23");
  if (w.dim() != 2) throw PreconditionViolated("dim A^2 = " + std::to_string(w.dim()));
  for (const auto& v : w.basis())
    for (std::size_t i = 0; i < n; ++i)
      if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; }) &&
          !(product(a, basis_vector(n, i), v) == Vector(n, Rational(0))))
        throw PreconditionViolated("A A^2 != 0");

  // A = U + A^2 with U spanned by standard vectors off the pivots of A^2; the
  // product is then a pair of skew forms on U with values in A^2.
  auto piv = leading_indices(w);
  auto u = complement_indices(w);
  const std::size_t du = u.size();
  QMatrix b1(du, du), b2(du, du);
  for (std::size_t x = 0; x < du; ++x)
    for (std::size_t y = x + 1; y < du; ++y) {
      Vector v = product(a, basis_vector(n, u[x]), basis_vector(n, u[y]));
      b1(x, y) = v[piv[0]];
      b1(y, x) = -v[piv[0]];
      b2(x, y) = v[piv[1]];
      b2(y, x) = -v[piv[1]];
    }

  // Support of the pencil: U modulo the common radical of both forms.
  QMatrix stacked(2 * du, du);
  for (std::size_t r = 0; r < du; ++r)
    for (std::size_t c = 0; c < du; ++c) {
      stacked(r, c) = b1(r, c);
      stacked(du + r, c) = b2(r, c);
    }
  Subspace radical = kernel_basis(stacked);
  auto support = complement_indices(radical);
  QMatrix r1 = restrict_form(b1, support), r2 = restrict_form(b2, support);

  switch (support.size()) {
    case 3:
      return named("T22");
    case 4: {
      auto [p, q, r] = pfaffian_form(r1, r2, {0, 1, 2, 3});
      if (sgn(p) == 0 && sgn(q) == 0 && sgn(r) == 0) throw Error("pencil of support 4 with vanishing Pfaffian");
      Rational disc = q * q - 4 * p * r;
      if (sgn(disc) == 0) return named("T22_e24");
      if (is_rational_square(disc)) return named("T22_e34");
      return {Classification::Kind::needs_extension, std::nullopt};
    }
    case 5: {
      // Support 5 is either a single minimal-index block (no common root of the
      // 4x4 Pfaffians) or a 3-dim minimal block plus a doubled eigenvalue block.
      std::vector<std::array<Rational, 3>> forms;
      for (std::size_t skip = 0; skip < 5; ++skip) {
        std::array<std::size_t, 4> idx{};
        for (std::size_t k = 0, t = 0; k < 5; ++k)
          if (k != skip) idx[t++] = k;
        auto f = pfaffian_form(r1, r2, idx);
        if (sgn(f[0]) != 0 || sgn(f[1]) != 0 || sgn(f[2]) != 0) forms.push_back(f);
      }
      if (forms.empty()) throw Error("pencil of support 5 with vanishing Pfaffians");
      bool u_divides_all = std::all_of(forms.begin(), forms.end(), [](const auto& f) { return sgn(f[0]) == 0; });
      Polynomial g;
      for (const auto& f : forms) g = gcd(g, Polynomial({f[2], f[1], f[0]}));
      if (u_divides_all || g.degree() >= 1) return named("T22_e45");
      return {Classification::Kind::level_at_least_6, std::nullopt};
    }
    default:
      if (support.size() >= 6) return {Classification::Kind::level_at_least_6, std::nullopt};
      throw PreconditionViolated("pencil support " + std::to_string(support.size()));
  }
}

}  // namespace degenlab
