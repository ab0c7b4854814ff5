#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qpa/diagram.hpp"
#include "qpa/rep_theory.hpp"

using namespace qpa;

namespace {
Diagram D(const char* s, int k = 0) { return parse_diagram(s, k); }
}  // namespace

TEST_CASE("canonical form ignores block and vertex order") {
  const Diagram a = D("{{1',2,1},{3},{4,4',3',2'}}", 4);
  CHECK(a == D("{1,2,1'|3|2',3',4',4}", 4));
  CHECK(to_string(a) == "{1,2,1'|3|4,2',3',4'}");
  CHECK(D("{{1,1'}}") == Diagram::identity(1));
  CHECK(D("{{2',1'},{2,1}}") == D("{1,2|1',2'}"));
  CHECK(D("{{1,2},{1',2'}}") == D("{{1',2'},{2,1}}"));
}

TEST_CASE("construction errors name the vertex") {
  CHECK_THROWS_WITH_AS(D("{{1,1',2'},{3},{2',3',4',4}}", 4), "duplicated vertex 2'", std::invalid_argument);
  CHECK_THROWS_WITH_AS(D("{1,1'|2}", 2), "missing vertex 2'", std::invalid_argument);
  CHECK_THROWS_AS(D("{1,3'|2,2'|1',3}", 2), std::invalid_argument);
  CHECK_THROWS_AS(D("1,1'"), std::invalid_argument);
  CHECK_THROWS_AS(D("{1,x}"), std::invalid_argument);
}

TEST_CASE("text and JSON round trips") {
  for (const auto& d : enumerate_basis_P(2)) {
    CHECK(parse_diagram(to_string(d), 2) == d);
    CHECK(diagram_from_json(to_json(d)) == d);
  }
}

TEST_CASE("compose") {
  const Diagram d1 = D("{{1,2},{3},{4,3',4'},{1',2'}}", 4);
  const Diagram d2 = D("{{1},{2},{3,1'},{4,2',3',4'}}", 4);
  const ComposeResult r = compose(d1, d2);
  CHECK(r.diagram == D("{{1,2},{3},{4,1',2',3',4'}}", 4));
  CHECK(r.loops == 1);
  const Diagram e1 = generator('e', 1, 2);
  CHECK(compose(e1, e1).diagram == e1);
  CHECK(compose(e1, e1).loops == 1);
  for (const auto& d : enumerate_basis_P(2)) {
    CHECK(compose(Diagram::identity(2), d).diagram == d);
    CHECK(compose(Diagram::identity(2), d).loops == 0);
    CHECK(compose(d, Diagram::identity(2)).diagram == d);
  }
  CHECK_THROWS_AS(compose(Diagram::identity(2), Diagram::identity(3)), std::invalid_argument);
}

TEST_CASE("compose is associative including loop counts") {
  const auto basis = enumerate_basis_P(2);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const auto ab = compose(a, b), bc = compose(b, c);
        const auto left = compose(ab.diagram, c), right = compose(a, bc.diagram);
        CHECK(left.diagram == right.diagram);
        CHECK(ab.loops + left.loops == bc.loops + right.loops);
      }
}

TEST_CASE("refinement order") {
  CHECK(is_refinement(D("{1,2|1',2'}"), D("{1,2,1',2'}")));
  CHECK_FALSE(is_refinement(D("{1,1'|2,2'}"), D("{1,2|1',2'}")));
  for (const auto& d : enumerate_basis_P(2)) CHECK(is_refinement(d, d));
}

TEST_CASE("isolation") {
  const Diagram d = D("{{1,1',2'},{2,3,4},{3',4'}}", 4);
  const Diagram want = D("{{1,2'},{1'},{2,3,4},{3'},{4'}}", 4);
  CHECK(isolate(d, std::vector<Vertex>{Vertex::bottom(1), Vertex::bottom(4)}) == want);
  CHECK(isolate(d, std::vector<Vertex>{Vertex::bottom(1), Vertex::bottom(3), Vertex::bottom(4)}) == want);
  CHECK(isolate(d, VertexMask{0}) == d);
}

TEST_CASE("block split and singleton detection") {
  const Diagram d = D("{{1,2,1'},{2',3',4'},{3,4}}", 4);
  const auto split = block_split(d.blocks().front());
  CHECK(split.top == Block{Vertex::top(1), Vertex::top(2)});
  CHECK(split.bottom == Block{Vertex::bottom(1)});
  CHECK(top_blocks(d) == std::vector<Block>{{Vertex::top(3), Vertex::top(4)}});
  CHECK(bottom_blocks(d) == std::vector<Block>{{Vertex::bottom(2), Vertex::bottom(3), Vertex::bottom(4)}});
  CHECK_FALSE(has_isolated(Diagram::identity(3)));
  CHECK(has_isolated(D("{{1},{1'}}")));
}

TEST_CASE("generators") {
  CHECK(generator('t', 1, 3) == D("{{1,2,1'},{3,2',3'}}", 3));
  CHECK(generator('h', 1, 3) == D("{{1,2,3},{1',2',3'}}", 3));
  CHECK(generator('s', 1, 2) == D("{1,2'|2,1'}"));
  CHECK(generator('e', 1, 2) == D("{1,2|1',2'}"));
  CHECK(generator('b', 1, 2) == D("{1,2,1',2'}"));
  CHECK(generator('p', 1, 1) == D("{1|1'}"));
  const auto b1p2 = compose(generator('b', 1, 3), generator('p', 2, 3));
  const auto t = compose(b1p2.diagram, generator('b', 2, 3));
  CHECK(t.diagram == generator('t', 1, 3));
  CHECK(b1p2.loops + t.loops == 0);
  CHECK_THROWS_AS(generator('t', 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator('s', 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator('q', 1, 3), std::invalid_argument);
}

TEST_CASE("basis enumeration") {
  CHECK(enumerate_basis_P(2).size() == 15);
  const auto qp2 = enumerate_basis_QP(2);
  const std::set<Diagram> want{D("{1,2,1',2'}"), D("{1,2|1',2'}"), D("{1,1'|2,2'}"), D("{1,2'|2,1'}")};
  CHECK(std::set<Diagram>(qp2.begin(), qp2.end()) == want);
  CHECK(qp2.size() == 4);
  CHECK(enumerate_basis_QP(3).size() == 41);
  CHECK(enumerate_basis_QP(4).size() == 715);
  for (int k = 1; k <= 4; ++k) {
    const auto basis = enumerate_basis_QP(k);
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    for (const auto& d : basis) CHECK_FALSE(d.has_isolated());
  }
}

TEST_CASE("set partition enumeration matches Bell and singleton-free counts") {
  for (int m = 0; m <= 9; ++m) {
    std::size_t all = 0, free = 0;
    enumerate_setpartitions(m, [&](std::span<const std::uint8_t>) { ++all; });
    enumerate_setpartitions_no_singleton(m, [&](std::span<const std::uint8_t>) { ++free; });
    CHECK(BigInt(static_cast<unsigned long>(all)) == bell(m));
    CHECK(BigInt(static_cast<unsigned long>(free)) == no_singleton_count(m));
  }
}
