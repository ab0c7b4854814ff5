// Acceptance run: one PASS/FAIL line per criterion, with timings.
//
// Two criteria contain items that cannot hold as stated: two printed top-term
// values are wrong, and the nonvanishing claim fails for h1 on three k = 3
// diagrams. Those items still print FAIL. The exit code ignores them only when
// the failure is exactly the documented one, so any other failure fails ctest.

#include <chrono>
#include <cstdio>
#include <tuple>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "qpa/factorization.hpp"
#include "qpa/quasi_partition.hpp"
#include "qpa/rep_theory.hpp"
#include "qpa/tensor_oracle.hpp"
#include "qpa/verify.hpp"

using namespace qpa;

namespace {

struct Outcome {
  bool pass = true;
  bool known = false;  // failed exactly as documented
  std::vector<std::string> notes;
  void fail(std::string why) {
    pass = false;
    notes.push_back(std::move(why));
  }
};

int unexpected = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = Outcome{};
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d: %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              !o.pass && o.known ? " [documented deviation]" : "");
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  if (!o.pass && !o.known) ++unexpected;
}

void absorb(Outcome& o, const SuiteResult& r) {
  for (const auto& c : r.checks)
    if (!c.pass) o.fail(r.suite + ": " + c.name + " (" + c.detail + ")");
}

Outcome dimension_counts() {
  Outcome o;
  const char* want[] = {"1", "4", "41", "715", "17722"};
  for (int k = 1; k <= 5; ++k) {
    const DimensionCounts c = qp_dimension_counts(k);
    const std::string listed = std::to_string(enumerate_basis_QP(k).size());
    const bool ok = c.alternating == want[k - 1] && c.recurrence == want[k - 1] && c.enumerated == want[k - 1] &&
                    listed == want[k - 1];
    if (!ok)
      o.fail("k=" + std::to_string(k) + ": alternating " + c.alternating + ", recurrence " + c.recurrence +
             ", enumeration " + c.enumerated + ", basis " + listed);
  }
  return o;
}

Outcome oracle_certification() {
  Outcome o;
  const std::vector<std::pair<int, std::vector<int>>> runs{{2, {5, 6, 7}}, {3, {7, 8}}};
  for (const auto& [k, ns] : runs) {
    const StructureTable table = qp_structure_table(k);
    for (int n : ns) {
      const OracleReport r = oracle_check_table(table, n);
      o.notes.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + std::to_string(r.pairs) +
                        " pairs, " + std::to_string(r.mismatches) + " mismatches");
      if (r.mismatches) o.fail(r.failures.front());
      if (r.pairs != table.basis.size() * table.basis.size()) o.fail("pair count");
    }
  }
  return o;
}

Outcome relation_suite() {
  Outcome o;
  for (int k : {2, 3}) {
    const auto checks = verify_relations(k);
    bool saw_b2 = false;
    for (const auto& c : checks) {
      if (c.name.rfind("b1^2", 0) == 0) saw_b2 = true;
      if (!c.pass) o.fail("k=" + std::to_string(k) + " " + c.name + ": " + c.detail);
    }
    if (!saw_b2) o.fail("b1^2 relation not checked at k=" + std::to_string(k));
    o.notes.push_back("k=" + std::to_string(k) + ": " + std::to_string(checks.size()) + " relations");
  }
  const RatFunc n = RatFunc::variable();
  const Diagram b1 = generator('b', 1, 2), e1 = generator('e', 1, 2);
  LinComb want(2, BasisTag::QP_bar);
  want.add_term(b1, (n - RatFunc(2)) / n);
  want.add_term(e1, RatFunc::inverse_power(2));
  if (!(qp_multiply(b1, b1) == want)) o.fail("b1^2 differs: " + to_string(qp_multiply(b1, b1)));
  return o;
}

Outcome top_term_table() {
  Outcome o;
  const std::set<std::string> documented{"b1: 1,2 in a block of size >= 4", "h1: {1,2} a block, 3 in a larger block"};
  std::set<std::string> printed_mismatch;
  bool other_failure = false;
  for (const auto& c : top_term_cases()) {
    const RatFunc got = top_term_coefficient(c.g, c.d);
    const int k = c.g.k();
    const Diagram target = compose(c.g, c.d).diagram;
    const BarBasisSolver s1(k, 2 * k + 1), s2(k, 2 * k + 2);
    for (const BarBasisSolver* s : {&s1, &s2}) {
      const int n = s->n();
      Rational oracle;
      if (!target.has_isolated()) {
        oracle = oracle_coefficient(*s, c.g, c.d, target);
      } else {
        const auto all = s->solve(bar_apply(c.g, n, bar_matrix(c.d, n)));
        for (const auto& x : all)
          if (x != 0) oracle = 1;  // any nonzero entry contradicts a zero product
      }
      if (oracle != got.eval(n)) {
        other_failure = true;
        o.fail(c.name + ": symbolic and oracle disagree at n=" + std::to_string(n));
      }
      if (oracle != c.printed.eval(n) && !printed_mismatch.count(c.name)) {
        printed_mismatch.insert(c.name);
        o.fail(c.name + ": printed " + to_string(c.printed) + ", symbolic " + to_string(got) + ", oracle " +
               to_string(oracle) + " at n=" + std::to_string(n));
      }
    }
  }
  o.notes.push_back(std::to_string(top_term_cases().size()) + " representatives checked at two n each");
  o.known = !other_failure && printed_mismatch == documented;
  return o;
}

Outcome top_term_dichotomy() {
  Outcome o;
  const SuiteResult r = topterm_suite(3, 0);
  absorb(o, r);
  // The documented exception: h1 against these three diagrams has a zero top
  // coefficient although h1 d is singleton-free. Confirm it independently.
  const Diagram h1 = generator('h', 1, 3);
  const std::vector<Diagram> zero{parse_diagram("{1,2|3,1',2',3'}", 3), parse_diagram("{1,3|2,1',2',3'}", 3),
                                  parse_diagram("{2,3|1,1',2',3'}", 3)};
  std::size_t confirmed = 0;
  for (const auto& d : zero) {
    bool ok = top_term_coefficient(h1, d).is_zero() && !compose(h1, d).diagram.has_isolated();
    for (int n : {7, 8}) ok = ok && oracle_coefficient(h1, d, compose(h1, d).diagram, n) == 0;
    confirmed += ok;
  }
  std::size_t failing_checks = 0;
  bool only_h1 = true;
  for (const auto& c : r.checks)
    if (!c.pass) {
      ++failing_checks;
      only_h1 = only_h1 && c.name == "dichotomy for h1" && c.detail.rfind("41 diagrams, 3 failures", 0) == 0;
    }
  if (confirmed == zero.size()) o.notes.push_back("oracle confirms the three zero top coefficients at n=7,8");
  o.known = !o.pass && failing_checks == 1 && only_h1 && confirmed == zero.size();
  return o;
}

Outcome triangularity() {
  Outcome o;
  for (int k = 1; k <= 3; ++k) absorb(o, triangularity_suite(k, 0, ""));
  return o;
}

Outcome representation_theory() {
  Outcome o;
  for (int k = 0; k <= 6; ++k) absorb(o, irreps_suite(k));
  const BratteliGraph g = bratteli_graph(4);
  using E = std::tuple<int, IntPartition, IntPartition>;
  const IntPartition e{}, one{1}, two{2}, oo{1, 1}, three{3}, tw{2, 1}, ooo{1, 1, 1};
  const std::vector<std::vector<IntPartition>> nodes{{e}, {one}, {e, one, two, oo}, {e, one, two, oo, three, tw, ooo}};
  for (int l = 0; l <= 3; ++l) {
    const std::set<IntPartition> got(g.levels[static_cast<std::size_t>(l)].begin(), g.levels[static_cast<std::size_t>(l)].end());
    if (got != std::set<IntPartition>(nodes[static_cast<std::size_t>(l)].begin(), nodes[static_cast<std::size_t>(l)].end()))
      o.fail("node set differs at level " + std::to_string(l));
  }
  // Edges between levels 0 and 3, as drawn; every drawn edge is single.
  const std::set<E> drawn{{0, e, one},   {1, one, e},   {1, one, one}, {1, one, two},  {1, one, oo},
                          {2, e, one},   {2, one, e},   {2, one, one}, {2, one, two},  {2, one, oo},
                          {2, two, one}, {2, two, two}, {2, two, oo},  {2, two, three}, {2, two, tw},
                          {2, oo, one},  {2, oo, two},  {2, oo, oo},   {2, oo, tw},    {2, oo, ooo}};
  std::set<E> got;
  for (const auto& [key, m] : g.edges)
    if (std::get<0>(key) <= 2) {
      got.insert(key);
      if (m != 1) o.fail("multiplicity " + std::to_string(m) + " on a drawn single edge");
    }
  if (got != drawn) o.fail("edge set between levels 0 and 3 differs from the drawing");
  auto mult = [&](const IntPartition& b) {
    auto it = g.edges.find({3, tw, b});
    return it == g.edges.end() ? 0 : it->second;
  };
  if (mult(tw) != 2) o.fail("edge (2,1) -> (2,1) has multiplicity " + std::to_string(mult(tw)));
  for (const auto& b : {two, oo, IntPartition{3, 1}, IntPartition{2, 2}, IntPartition{2, 1, 1}})
    if (mult(b) != 1) o.fail("edge (2,1) -> " + to_string(b) + " missing");
  return o;
}

Outcome generation() {
  Outcome o;
  for (int k : {2, 3}) {
    const ClosureReport r = closure_check(k);
    o.notes.push_back("k=" + std::to_string(k) + ": closure reaches " + std::to_string(r.reached_in_D) + " of " +
                      std::to_string(r.size_of_D));
    if (!r.complete()) o.fail("closure incomplete at k=" + std::to_string(k));
  }
  Factorizer f(3);
  std::size_t ok = 0, total = 0;
  for (const auto& d : enumerate_basis_QP(3)) {
    ++total;
    const GenWord w = f.factor(d);
    if (evaluate_word(w).diagram == d && suffixes_singleton_free(w)) ++ok;
    else o.fail("factor failed for " + to_string(d));
  }
  o.notes.push_back(std::to_string(ok) + " of " + std::to_string(total) + " diagrams factor with the suffix property");
  if (total != 41) o.fail("expected 41 diagrams");
  return o;
}

Outcome centralizer() {
  Outcome o;
  absorb(o, centralizer_suite(2, 5, 20, 20261016));
  return o;
}

}  // namespace

int main() {
  criterion(1, "QP dimensions for k = 1..5 three ways", dimension_counts);
  criterion(2, "oracle certification of every structure constant", oracle_certification);
  criterion(3, "generator relations at k = 2, 3", relation_suite);
  criterion(4, "top-term coefficient table", top_term_table);
  criterion(5, "top-term dichotomy at k = 3", top_term_dichotomy);
  criterion(6, "triangular support and zero residual for k <= 3", triangularity);
  criterion(7, "irreducible dimensions and Bratteli levels", representation_theory);
  criterion(8, "generation and factorisation", generation);
  criterion(9, "bar matrices commute with the symmetric group", centralizer);
  std::printf("unexpected failures: %d\n", unexpected);
  return unexpected ? 1 : 0;
}
