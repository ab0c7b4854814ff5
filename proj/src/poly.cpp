#include "qpa/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpa {

namespace {
const Rational kZero{0};
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::variable() { return monomial(1, 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

const Rational& Poly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

std::size_t Poly::lowest_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  throw std::domain_error("lowest degree of zero polynomial");
}

bool Poly::is_monomial() const {
  return !coeffs_.empty() && lowest_degree() + 1 == coeffs_.size();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return {};
  Poly out = *this;
  const Rational lead = leading();
  if (lead != 1) {
    for (auto& c : out.coeffs_) c /= lead;
  }
  return out;
}

Poly Poly::shifted_up(std::size_t s) const {
  if (coeffs_.empty() || s == 0) return *this;
  Poly out;
  out.coeffs_.resize(coeffs_.size() + s);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + static_cast<std::ptrdiff_t>(s));
  return out;
}

Poly Poly::shifted_down(std::size_t s) const {
  if (s == 0) return *this;
  if (coeffs_.empty()) return {};
  if (lowest_degree() < s) throw std::domain_error("polynomial not divisible by n^s");
  Poly out;
  out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(s), coeffs_.end());
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  const Rational& lead = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const auto top = static_cast<std::size_t>(i + b.degree());
    if (rem[top] == 0) continue;
    Rational q = rem[top] / lead;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
    quot[static_cast<std::size_t>(i)] = std::move(q);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string to_string(const Poly& p, bool compact) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string body;
    if (d == 0) {
      body = to_string(mag);
    } else {
      if (mag != 1) body = to_string(mag) + "*";
      body += "n";
      if (d > 1) body += "^" + std::to_string(d);
    }
    if (first) {
      out += negative ? "-" : "";
    } else if (compact) {
      out += negative ? "-" : "+";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

}  // namespace qpa
