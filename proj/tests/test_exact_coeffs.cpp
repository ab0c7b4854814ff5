#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/ratfunc.hpp"

using namespace qpa;

namespace {
RatFunc P(const char* s) { return parse_ratfunc(s); }
RatFunc norm(std::vector<long> num, std::vector<long> den) {
  std::vector<Rational> a(num.begin(), num.end()), b(den.begin(), den.end());
  return RatFunc::normalize(Poly(a), Poly(b));
}
}  // namespace

TEST_CASE("normalize cancels common factors") {
  // Coefficient vectors are lowest degree first.
  CHECK(norm({-1, 0, 1}, {-1, 1}) == P("n+1"));
  const RatFunc zero = norm({0}, {0, 0, 0, 1});
  CHECK(zero.is_zero());
  CHECK(zero.den() == Poly::constant(1));
  const RatFunc f = norm({-4, 2}, {0, 2});
  CHECK(f == P("(n-2)/n"));
  CHECK(f.den() == Poly::variable());
}

TEST_CASE("normalize rejects a zero denominator") {
  CHECK_THROWS_WITH_AS(norm({1}, {0}), "zero denominator", std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  CHECK(P("n-1") + RatFunc(0) == P("n-1"));
  CHECK(P("1/n") * P("1/n") == RatFunc::inverse_power(2));
  CHECK(P("(n-2)/n") * P("(n-2)/n") + P("1/n^2") * P("n-1") == P("(n^2-3*n+3)/n^2"));
  CHECK(P("(n-1)/(n+1)") / P("(n-1)/(n+1)") == RatFunc(1));
  CHECK_THROWS_AS(P("n") / RatFunc(0), std::domain_error);
  CHECK(P("n^2-1") / P("n+1") == P("n-1"));
  CHECK(P("1/(n-1)") + P("1/(n+1)") == P("2*n/(n^2-1)"));
}

TEST_CASE("evaluation") {
  CHECK(P("n-1").eval(5) == 4);
  CHECK(P("(n-1)/n").eval(5) == Rational(4, 5));
  CHECK(P("(n-1)*(n-2)/n^2").eval(7) == Rational(30, 49));
  CHECK_THROWS_WITH_AS(P("1/n").eval(0), "pole at evaluation point", std::domain_error);
}

TEST_CASE("printing and parsing round trip") {
  for (const char* s : {"0", "1", "-1/n", "(n-1)/n", "n^3-2*n+7/3", "(n^2-3*n+2)/n^2", "1/(n^2+1)"}) {
    const RatFunc f = P(s);
    CHECK(P(to_string(f).c_str()) == f);
    CHECK(P(to_string(f, true).c_str()) == f);
  }
  CHECK(to_string(P("n-1"), true) == "n-1");
  CHECK_THROWS_AS(P("n+"), std::invalid_argument);
  CHECK_THROWS_AS(P("(n"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
}

TEST_CASE("monomial denominators stay canonical") {
  RatFunc acc;
  for (int e = 0; e < 6; ++e) acc += RatFunc::inverse_power(static_cast<unsigned>(e)) * RatFunc(e % 2 ? -1 : 1);
  CHECK(acc.den() == Poly::monomial(1, 5));
  CHECK(acc * P("n^5") == P("n^5-n^4+n^3-n^2+n-1"));
}

TEST_CASE("polynomial gcd and division") {
  const Poly a = (Poly::variable() - Poly::constant(1)) * (Poly::variable() + Poly::constant(2));
  const Poly b = (Poly::variable() - Poly::constant(1)) * (Poly::variable() - Poly::constant(3));
  CHECK(gcd(a, b) == Poly::variable() - Poly::constant(1));
  auto [q, r] = divmod(a, Poly::variable() - Poly::constant(1));
  CHECK(r.is_zero());
  CHECK(q == Poly::variable() + Poly::constant(2));
}
