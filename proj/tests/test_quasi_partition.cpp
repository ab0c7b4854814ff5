#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <filesystem>

#include "qpa/quasi_partition.hpp"

using namespace qpa;

namespace {
Diagram D(const char* s, int k = 0) { return parse_diagram(s, k); }
const RatFunc n = RatFunc::variable();
LinComb bar(const Diagram& d, RatFunc c = RatFunc(1)) { return LinComb::single(d, BasisTag::QP_bar, c); }
}  // namespace

TEST_CASE("bar expansion of e1") {
  const LinComb got = bar_expand(generator('e', 1, 2));
  LinComb want(2, BasisTag::bracket);
  want.add_term(D("{1,2|1',2'}"), RatFunc(1));
  want.add_term(D("{1,2|1'|2'}"), RatFunc(1));
  want.add_term(D("{1|2|1',2'}"), -RatFunc::inverse_power(1));
  want.add_term(D("{1|2|1'|2'}"), -RatFunc::inverse_power(1));
  CHECK(got == want);
}

TEST_CASE("bar of the identity is the bracket identity") {
  // pi restricted to W is the identity of W.
  for (int k = 1; k <= 3; ++k) CHECK(bar_expand(Diagram::identity(k)) == LinComb::identity(k, BasisTag::bracket));
}

TEST_CASE("bar expansion rejects singleton diagrams") {
  CHECK_THROWS_WITH_AS(bar_expand(D("{1|1'}")), "bar of singleton diagram is zero; not a basis element",
                       std::invalid_argument);
  CHECK(bar_expand(D("{1|1'}"), true).is_zero());
}

TEST_CASE("collected coefficients agree with the direct sum") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& d : enumerate_basis_QP(k)) {
      const LinComb direct = bar_expand(d);
      LinComb collected(k, BasisTag::bracket);
      const VertexMask all = (VertexMask{1} << (2 * k)) - 1;
      // Every subset U; distinct U can give the same isolation, so collect
      // once per distinct singleton set.
      std::map<Diagram, bool> done;
      for (VertexMask U = 0; U <= all; ++U) {
        const Diagram iso = isolate(d, U);
        if (iso.isolated_mask() != U || done[iso]) continue;
        done[iso] = true;
        if (!is_viable(d, U)) continue;
        collected.add_term(iso, collected_coefficient(d, U));
      }
      CHECK_MESSAGE(collected == direct, to_string(d));
    }
}

TEST_CASE("collected coefficient closed forms") {
  // U inside the bottom row, made of whole bottom-only blocks: (-1)^|U|.
  const Diagram d = D("{1,2,1'|3,2',3'}", 3);
  const Diagram e = D("{1,2,3|1',2',3'}", 3);
  const VertexMask bot3 = to_mask(std::vector<Vertex>{Vertex::bottom(1), Vertex::bottom(2), Vertex::bottom(3)}, 3);
  CHECK(collected_coefficient(e, bot3) == RatFunc(-1));
  CHECK(collected_coefficient(generator('e', 1, 2), to_mask(std::vector<Vertex>{Vertex::bottom(1), Vertex::bottom(2)}, 2)) ==
        RatFunc(1));
  // A vertical pair isolated entirely with one bottom vertex: zero.
  const Diagram f = D("{1,1'|2,3,2',3'}", 3);
  CHECK(collected_coefficient(f, to_mask(std::vector<Vertex>{Vertex::top(1), Vertex::bottom(1)}, 3)).is_zero());
  // One isolated top-only block of size r: (-1)^|U| n^{-(|U top| - 1)} (1 - r).
  const Diagram g = D("{1,2,3|1',2',3'}", 3);
  const VertexMask top3 = to_mask(std::vector<Vertex>{Vertex::top(1), Vertex::top(2), Vertex::top(3)}, 3);
  CHECK(collected_coefficient(g, top3) == RatFunc(-1) * RatFunc::inverse_power(2) * RatFunc(1 - 3));
  CHECK_THROWS_AS(collected_coefficient(d, to_mask(std::vector<Vertex>{Vertex::bottom(2)}, 3)), std::invalid_argument);
}

TEST_CASE("displayed relations") {
  const Diagram e1 = generator('e', 1, 2), b1 = generator('b', 1, 2);
  CHECK(qp_multiply(e1, e1) == bar(e1, n - RatFunc(1)));
  CHECK(qp_multiply(b1, b1) == bar(b1, (n - RatFunc(2)) / n) + bar(e1, RatFunc::inverse_power(2)));
  CHECK(qp_multiply(generator('e', 1, 3), generator('t', 1, 3)).is_zero());
  for (int k = 2; k <= 3; ++k)
    for (const auto& c : verify_relations(k)) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  CHECK(bar_word_product("e1 e2 e1", 3) == bar(generator('e', 1, 3)));
}

TEST_CASE("identity is the unit of the bar product") {
  for (const auto& d : enumerate_basis_QP(3)) {
    CHECK(qp_multiply(Diagram::identity(3), d) == bar(d));
    CHECK(qp_multiply(d, Diagram::identity(3)) == bar(d));
  }
}

TEST_CASE("bar product is associative at k = 2") {
  const auto basis = enumerate_basis_QP(2);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis)
        CHECK(qp_product(qp_multiply(a, b), bar(c)) == qp_product(bar(a), qp_multiply(b, c)));
}

TEST_CASE("residual cancels and the support is triangular") {
  const auto basis = enumerate_basis_QP(2);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto det = qp_multiply_detailed(a, b);
      CHECK(det.residual.is_zero());
      for (const auto& [d, c] : det.result.terms()) CHECK(is_refinement(d, compose(a, b).diagram));
    }
}

TEST_CASE("structure table and cache") {
  const auto dir = std::filesystem::temp_directory_path() / "qpa_test_cache";
  std::filesystem::remove_all(dir);
  const StructureTable t1 = qp_structure_table(2, 2, dir.string());
  CHECK(t1.entries.size() == 16);
  CHECK(std::filesystem::exists(dir / structure_table_filename(2)));
  const StructureTable t2 = qp_structure_table(2, 1, dir.string());
  CHECK(t2.entries == t1.entries);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(t1.at(i, j) == qp_multiply(t1.basis[i], t1.basis[j]));
  const StructureTable one = qp_structure_table(1);
  CHECK(one.entries.size() == 1);
  CHECK(one.at(0, 0) == bar(Diagram::identity(1)));
  CHECK_THROWS_AS(t1.product(D("{1|1'|2,2'}"), D("{1,2|1',2'}")), std::invalid_argument);
  CHECK_THROWS_AS(qp_structure_table(4), std::invalid_argument);
  std::filesystem::remove_all(dir);
}

TEST_CASE("top term coefficients from the case analysis") {
  const Diagram e1 = generator('e', 1, 3), b1 = generator('b', 1, 3), t1 = generator('t', 1, 3),
                h1 = generator('h', 1, 3);
  CHECK(top_term_coefficient(e1, D("{1,2|3,1',2',3'}", 3)) == n - RatFunc(1));
  CHECK(top_term_coefficient(b1, D("{1,2,1'|3,2',3'}", 3)) == (n - RatFunc(2)) / n);
  CHECK(qp_multiply(t1, D("{2,3|1,1',2',3'}", 3)).is_zero());
  CHECK(top_term_coefficient(h1, D("{1,2,3,1',2',3'}", 3)) == (n - RatFunc(1)) * (n - RatFunc(2)) / (n * n));
}
