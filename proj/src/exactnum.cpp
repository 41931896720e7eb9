#include "degenlab/exactnum.hpp"

#include <cctype>
#include <utility>

namespace degenlab {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("not a rational literal: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw DivisionByZero("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Rational inv = 1 / leading();
  p *= inv;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = c_[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo;
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  Rational inv = 1 / bc.back();
  if (rem.size() > db) {
    quo.assign(rem.size() - db, Rational(0));
    for (std::size_t k = rem.size(); k-- > db;) {
      Rational f = rem[k] * inv;
      if (sgn(f) == 0) continue;
      quo[k - db] = f;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
  }
  q = Polynomial(std::move(quo));
  r = Polynomial(std::move(rem));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(long v)
    : num_(Polynomial::constant(Rational(v))), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalFunction RationalFunction::t() {
  return RationalFunction(Polynomial::monomial(1, 1), Polynomial::constant(1));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      Polynomial q, r;
      divmod(num_, g, q, r);
      num_ = std::move(q);
      divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op) {
  switch (op) {
    case RfOp::add: return a + b;
    case RfOp::sub: return a - b;
    case RfOp::mul: return a * b;
    case RfOp::div: return a / b;
  }
  throw Error("unreachable");
}

Rational rf_eval_at_zero(const RationalFunction& f) {
  if (!f.regular_at_zero()) throw PoleAtZero("pole at t = 0 in " + f.to_string());
  return f.num().coeff(0) / f.den().coeff(0);
}

// -------------------------------------------------------------------- parser

namespace {

class RfParser {
 public:
  explicit RfParser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
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
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }
  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RationalFunction power() {
    RationalFunction base = primary();
    if (!eat('^')) return base;
    unsigned long e = std::stoul(digits());
    if (e > 4096) fail("exponent too large");
    RationalFunction r(1L);
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
  }
  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RationalFunction::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(Integer(digits())));
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return RfParser(text).parse(); }

}  // namespace degenlab
