#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpa/factorization.hpp"

using namespace qpa;

namespace {
Diagram D(const char* s, int k = 0) { return parse_diagram(s, k); }
}  // namespace

TEST_CASE("word evaluation") {
  CHECK(evaluate_word(parse_word("t1", 3)).diagram == generator('t', 1, 3));
  const auto ss = evaluate_word(parse_word("s1 s1", 2));
  CHECK(ss.diagram == Diagram::identity(2));
  CHECK(ss.loops == 0);
  CHECK(evaluate_word(parse_word("", 3)).diagram == Diagram::identity(3));
  CHECK(to_string(parse_word("s1 e1 b1", 2)) == "s1 e1 b1");
  CHECK_THROWS_AS(parse_word("q1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("t2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s", 3), std::invalid_argument);
}

TEST_CASE("h1 through t2, e1 and transpositions at k = 4") {
  const auto r = evaluate_word(parse_word("t2 e1 s2 s3 t2 s2 s3", 4));
  CHECK(r.diagram == generator('h', 1, 4));
  CHECK(r.loops == 0);
}

TEST_CASE("permutation words") {
  const std::vector<int> perm{3, 1, 4, 2};
  const Diagram d = evaluate_word(permutation_word(perm)).diagram;
  for (int i = 1; i <= 4; ++i) {
    const auto blocks = d.blocks();
    bool found = false;
    for (const auto& b : blocks)
      if (b == Block{Vertex::top(i), Vertex::bottom(perm[static_cast<std::size_t>(i - 1)])}) found = true;
    CHECK(found);
  }
  CHECK(permutation_word({1, 2, 3}).letters.empty());
}

TEST_CASE("odd block reduction") {
  const auto even = reduce_odd_blocks(generator('e', 1, 3));
  CHECK(even.rule == "none");
  CHECK(even.prefix.letters.empty());
  CHECK(even.rest == generator('e', 1, 3));
  for (const char* s : {"{1,2,3|1',2',3'}", "{1,2,1'|3,2',3'}", "{1,1',2'|2,3,3'}", "{1,2,3,1',2'|3'}"}) {
    const Diagram d = D(s, 3);
    if (d.has_isolated()) continue;
    const auto red = reduce_odd_blocks(d);
    CHECK(red.rule != "none");
    const auto left = evaluate_word(red.prefix);
    const auto mid = compose(left.diagram, red.rest);
    const auto all = compose(mid.diagram, evaluate_word(red.suffix).diagram);
    CHECK_MESSAGE(all.diagram == d, s);
    std::size_t odd_before = 0, odd_after = 0;
    for (const auto& b : d.blocks()) odd_before += b.size() % 2;
    for (const auto& b : red.rest.blocks()) odd_after += b.size() % 2;
    CHECK(odd_after + 2 == odd_before);
  }
  const auto h = reduce_odd_blocks(generator('h', 1, 3));
  CHECK(h.rule == "case1");
  const auto t = reduce_odd_blocks(generator('t', 1, 3));
  CHECK(t.rule == "case2");
}

TEST_CASE("factorisation with the suffix property") {
  CHECK(factor(Diagram::identity(3)).letters.empty());
  const GenWord e2 = factor(generator('e', 2, 3));
  CHECK(evaluate_word(e2).diagram == generator('e', 2, 3));
  for (int k = 1; k <= 4; ++k) {
    Factorizer f(k);
    for (const auto& d : enumerate_basis_QP(k)) {
      const GenWord w = f.factor(d);
      CHECK(evaluate_word(w).diagram == d);
      CHECK(suffixes_singleton_free(w));
      for (const auto& l : w.letters) CHECK((l.name == 's' || l.index == 1));
    }
  }
  CHECK_THROWS_AS(factor(D("{1|1'|2,2'}")), std::invalid_argument);
}

TEST_CASE("closure of the generating set") {
  const auto r2 = closure_check(2);
  CHECK(r2.complete());
  CHECK(r2.size_of_D == 4);
  CHECK(r2.shortest.at(generator('b', 1, 2)).letters.size() == 1);
  const auto r3 = closure_check(3);
  CHECK(r3.complete());
  CHECK(r3.reached_in_D == 41);
  CHECK_THROWS_AS(closure_check(4), std::invalid_argument);
}
