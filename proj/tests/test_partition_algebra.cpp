#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/lincomb.hpp"

using namespace qpa;

namespace {
Diagram D(const char* s) { return parse_diagram(s); }
const RatFunc x = RatFunc::variable();
}  // namespace

TEST_CASE("loop parameter") {
  const Diagram e1 = generator('e', 1, 2);
  const auto P = [&](BasisTag t) { return LinComb::single(e1, t); };
  CHECK(p_multiply(P(BasisTag::P_diagram), P(BasisTag::P_diagram), LoopParam::x) ==
        LinComb::single(e1, BasisTag::P_diagram, x));
  CHECK(p_multiply(P(BasisTag::bracket), P(BasisTag::bracket), LoopParam::x_minus_1) ==
        LinComb::single(e1, BasisTag::bracket, x - RatFunc(1)));
}

TEST_CASE("identity is the unit") {
  const auto id = LinComb::identity(2);
  CHECK(id.size() == 1);
  CHECK(id.coefficient(D("{1,1'|2,2'}")) == RatFunc(1));
  for (const auto& d : enumerate_basis_P(2)) {
    const auto a = LinComb::single(d, BasisTag::P_diagram, x + RatFunc(3));
    CHECK(p_multiply(id, a, LoopParam::x) == a);
    CHECK(p_multiply(a, id, LoopParam::x) == a);
  }
}

TEST_CASE("vector space axioms") {
  LinComb a(2, BasisTag::P_diagram);
  a.add_term(D("{1,2|1',2'}"), x);
  a.add_term(D("{1|2|1',2'}"), RatFunc(2));
  CHECK((a + scale(RatFunc(-1), a)).is_zero());
  CHECK(scale(RatFunc(0), a).is_zero());
  CHECK((a - a).is_zero());
  LinComb b = a;
  b.add_term(D("{1,2|1',2'}"), -x);
  CHECK(b.size() == 1);
}

TEST_CASE("mismatches are rejected") {
  const auto a = LinComb::identity(2, BasisTag::P_diagram);
  const auto b = LinComb::identity(2, BasisTag::bracket);
  const auto c = LinComb::identity(3, BasisTag::P_diagram);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a + c, std::invalid_argument);
  CHECK_THROWS_AS(p_multiply(a, b, LoopParam::x), std::invalid_argument);
  LinComb q(1, BasisTag::QP_bar);
  CHECK_THROWS_AS(q.add_term(D("{1|1'}"), RatFunc(1)), std::invalid_argument);
}

TEST_CASE("multiplication is associative on P_2") {
  const auto basis = enumerate_basis_P(2);
  LinComb a(2, BasisTag::P_diagram), b(2, BasisTag::P_diagram), c(2, BasisTag::P_diagram);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    a.add_term(basis[i], RatFunc(static_cast<long>(i) + 1));
    if (i % 2) b.add_term(basis[i], x);
    if (i % 3 == 0) c.add_term(basis[i], RatFunc(1) / (x + RatFunc(static_cast<long>(i))));
  }
  CHECK(p_multiply(p_multiply(a, b, LoopParam::x), c, LoopParam::x) ==
        p_multiply(a, p_multiply(b, c, LoopParam::x), LoopParam::x));
}

TEST_CASE("printing and JSON") {
  const auto e = LinComb::single(D("{1,2|1',2'}"), BasisTag::QP_bar, x - RatFunc(1));
  CHECK(to_string(e) == "(n-1) * {1,2|1',2'}");
  CHECK(to_string(LinComb(2, BasisTag::QP_bar)) == "0");
  CHECK(lincomb_from_json(to_json(e), 2, BasisTag::QP_bar) == e);
}
