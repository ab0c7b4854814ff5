#pragma once

#include <string>
#include <string_view>

#include "qpa/poly.hpp"
#include "qpa/rational.hpp"

namespace qpa {

/// Element of Q(n) in canonical form: numerator and denominator coprime, the
/// denominator monic, zero stored as 0/1. Canonical form makes structural
/// equality the same as equality of functions.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                                            // NOLINT
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

  /// Throws std::invalid_argument("zero denominator") when den = 0.
  static RatFunc normalize(Poly num, Poly den);
  /// The indeterminate n.
  static RatFunc variable();
  /// n^(-e).
  static RatFunc inverse_power(unsigned e);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at an integer point; throws std::domain_error("pole at
  /// evaluation point") when the denominator vanishes there.
  Rational eval(const Rational& at) const;

  RatFunc pow(unsigned e) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

/// "n - 1", "(n^2 - 3*n + 2)/(n^2)"; compact drops the spaces around + and -.
std::string to_string(const RatFunc& f, bool compact = false);

/// Accepts the output of to_string and, more generally, any expression in n
/// built from rational literals, + - * / ^ and parentheses.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace qpa
