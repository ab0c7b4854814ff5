#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qpa/diagram.hpp"
#include "qpa/lincomb.hpp"
#include "qpa/ratfunc.hpp"

namespace qpa {

/// One (X, Y) summand of the bar expansion: X is a union of blocks that reach
/// the bottom row, Y a set of top vertices outside X, U = X | Y.
struct IsolationTerm {
  VertexMask X = 0;
  VertexMask Y = 0;
  VertexMask U = 0;
  RatFunc coeff;
};

/// All (X, Y) summands for d, uncollected, in (X, Y) mask order.
std::vector<IsolationTerm> isolation_terms(const Diagram& d);

/// pi^{(x)k} o d written in the bracket basis, by direct (X, Y) summation.
/// A diagram with a singleton block throws, unless singleton_as_zero is set,
/// in which case the zero combination is returned.
LinComb bar_expand(const Diagram& d, bool singleton_as_zero = false);

/// An isolation is viable when every block meeting an isolated bottom vertex
/// is isolated entirely.
bool is_viable(const Diagram& d, VertexMask isolated);

/// Closed-form coefficient of [isolate(d, U)] in bar_expand(d), computed block
/// by block. Throws when the isolation is not viable.
RatFunc collected_coefficient(const Diagram& d, VertexMask U);

struct QPProductDetail {
  LinComb bracket_product{0, BasisTag::bracket};  ///< bracket-basis product
  LinComb result{0, BasisTag::QP_bar};            ///< extracted bar coefficients
  LinComb residual{0, BasisTag::bracket};         ///< bracket_product minus expansion of result
};

/// Product of bar(d1) and bar(d2) in the bar basis.
LinComb qp_multiply(const Diagram& d1, const Diagram& d2);
/// Same product from precomputed bar expansions.
LinComb qp_multiply_expanded(const LinComb& bar1, const LinComb& bar2);
/// Product plus the residual check data.
QPProductDetail qp_multiply_detailed(const Diagram& d1, const Diagram& d2);

/// Bilinear extension of qp_multiply to bar-basis combinations.
LinComb qp_product(const LinComb& a, const LinComb& b);
/// Rewrites a bar-basis combination in the bracket basis.
LinComb bar_to_bracket(const LinComb& a);

struct StructureTable {
  int k = 0;
  std::vector<Diagram> basis;    ///< enumerate_basis_QP(k) order
  std::vector<LinComb> entries;  ///< entries[i * basis.size() + j] = bar(basis[i]) bar(basis[j])

  const LinComb& at(std::size_t i, std::size_t j) const { return entries[i * basis.size() + j]; }
  /// Throws if either diagram is not a basis element.
  const LinComb& product(const Diagram& d1, const Diagram& d2) const;
};

inline constexpr int kStructureCacheVersion = 1;
std::string structure_table_filename(int k);

/// Builds the full table, in parallel over pairs. With a non-empty cache_dir
/// the table is read from, or written to, structure_table_filename(k) there.
StructureTable qp_structure_table(int k, unsigned threads = 0, const std::string& cache_dir = "",
                                  int max_k = 3);

nlohmann::json to_json(const StructureTable& t);
StructureTable structure_table_from_json(const nlohmann::json& j, int k);

/// Coefficient of bar(g d) in bar(g) bar(d); zero when g d has a singleton.
RatFunc top_term_coefficient(const Diagram& g, const Diagram& d);

/// A representative for one case of the generator top-term analysis.
struct TopTermCase {
  std::string name;
  Diagram g;
  Diagram d;
  RatFunc printed;  ///< coefficient as stated in the case analysis
};
std::vector<TopTermCase> top_term_cases();

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string detail;  ///< computed left side when the check fails
};

/// Checks the displayed generator relations symbolically for every index
/// that fits in k.
std::vector<RelationCheck> verify_relations(int k);

/// bar(w_1) ... bar(w_m) for a word such as "e1 e2 e1"; empty word is the unit.
LinComb bar_word_product(const std::string& word, int k);

}  // namespace qpa
