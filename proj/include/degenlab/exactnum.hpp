#pragma once

// Exact scalars: rationals (GMP) and univariate rational functions in t.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "degenlab/errors.hpp"

namespace degenlab {

// mpq_class keeps numerator and denominator coprime with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws ParseError or DivisionByZero.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Dense coefficient vector, lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t d) const;
  const Rational& leading() const;
  Rational eval(const Rational& x) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Throws DivisionByZero for a zero divisor.
void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// num/den with gcd(num, den) = 1, den monic, and zero represented as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(long v);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction t();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // True iff the denominator does not vanish at t = 0.
  bool regular_at_zero() const { return !is_zero_scalar(den_.coeff(0)); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  static bool is_zero_scalar(const Rational& q) { return sgn(q) == 0; }
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

enum class RfOp { add, sub, mul, div };
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);

// Value at t = 0. Throws PoleAtZero when the denominator vanishes there.
Rational rf_eval_at_zero(const RationalFunction& f);

// Grammar: integers, t, + - * / ^ and parentheses; exponents are non-negative integers.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace degenlab
