#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qpa/rational.hpp"

namespace qpa {

/// Dense univariate polynomial over Q. coefficients()[i] is the coefficient of
/// n^i; trailing zeros are always trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly variable();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  /// Coefficient of n^i; zero beyond the degree.
  const Rational& operator[](std::size_t i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Smallest i with a nonzero coefficient. Requires a nonzero polynomial.
  std::size_t lowest_degree() const;
  bool is_monomial() const;
  bool is_one() const;

  Rational eval(const Rational& at) const;

  Poly monic() const;
  /// Multiply by n^s.
  Poly shifted_up(std::size_t s) const;
  /// Divide by n^s; requires lowest_degree() >= s.
  Poly shifted_down(std::size_t s) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Renders in the variable n, e.g. "n^2 - 3*n + 2" ("n^2-3*n+2" when compact).
std::string to_string(const Poly& p, bool compact = false);

}  // namespace qpa
