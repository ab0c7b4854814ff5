#include "qpa/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qpa {

namespace {

// Both denominators monic monomials n^p: the common denominator is n^max(p,q)
// and no gcd is needed.
bool monomial_den(const RatFunc& f) { return f.den().is_monomial(); }

}  // namespace

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  RatFunc out;
  if (num.is_zero()) return out;
  if (den.is_monomial()) {
    const auto d = static_cast<std::size_t>(den.degree());
    const std::size_t s = std::min(d, num.lowest_degree());
    const Rational lead = den.leading();
    num = num.shifted_down(s);
    if (lead != 1) num *= Rational(1) / lead;
    out.num_ = std::move(num);
    out.den_ = Poly::monomial(1, d - s);
    return out;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    num *= Rational(1) / lead;
    den *= Rational(1) / lead;
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RatFunc RatFunc::variable() { return RatFunc(Poly::variable()); }

RatFunc RatFunc::inverse_power(unsigned e) {
  RatFunc out;
  out.num_ = Poly::constant(1);
  out.den_ = Poly::monomial(1, e);
  return out;
}

Rational RatFunc::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d == 0) throw std::domain_error("pole at evaluation point");
  return num_.eval(at) / d;
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc out(1);
  RatFunc base = *this;
  while (e) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (monomial_den(*this) && monomial_den(rhs)) {
    const auto p = static_cast<std::size_t>(den_.degree());
    const auto q = static_cast<std::size_t>(rhs.den_.degree());
    const std::size_t m = std::max(p, q);
    Poly num = num_.shifted_up(m - p) + rhs.num_.shifted_up(m - q);
    return *this = normalize(std::move(num), Poly::monomial(1, m));
  }
  if (den_ == rhs.den_) return *this = normalize(num_ + rhs.num_, den_);
  return *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  return *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  return *this = normalize(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

namespace {

// Parenthesizes p unless it is a single term with positive coefficient.
std::string factor_string(const Poly& p, bool compact) {
  std::size_t terms = 0;
  for (const auto& c : p.coefficients()) terms += c != 0;
  const std::string s = to_string(p, compact);
  return terms == 1 && p.leading() > 0 && s.find('/') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string to_string(const RatFunc& f, bool compact) {
  if (f.is_polynomial()) return to_string(f.num(), compact);
  std::size_t terms = 0;
  for (const auto& c : f.num().coefficients()) terms += c != 0;
  if (terms == 1 && f.num().leading() < 0) return "-" + to_string(-f, compact);
  return factor_string(f.num(), compact) + "/" + factor_string(f.den(), compact);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  RatFunc parse() {
    if (text_.empty()) fail("empty expression");
    RatFunc out = expr();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse rational function '" + text_ + "': " + what);
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("zero denominator");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (eat('^')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  RatFunc primary() {
    if (eat('(')) {
      RatFunc inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (eat('n') || eat('x')) return RatFunc::variable();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, n, or '('");
    return RatFunc(Rational(BigInt(text_.substr(start, pos_ - start))));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

}  // namespace qpa
