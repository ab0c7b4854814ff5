#include "qpa/quasi_partition.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "qpa/factorization.hpp"
#include "qpa/parallel.hpp"

namespace qpa {

namespace {

VertexMask top_row(int k) { return (VertexMask{1} << k) - 1; }

RatFunc signed_inverse_power(int sign_exponent, int power) {
  RatFunc c = RatFunc::inverse_power(static_cast<unsigned>(power));
  return (sign_exponent & 1) ? -c : c;
}

}  // namespace

std::vector<IsolationTerm> isolation_terms(const Diagram& d) {
  const VertexMask top = top_row(d.k());
  std::vector<VertexMask> reaching, top_only;
  for (auto b : d.block_masks()) (b & ~top ? reaching : top_only).push_back(b);

  std::vector<IsolationTerm> out;
  const std::size_t subsets = std::size_t{1} << reaching.size();
  for (std::size_t s = 0; s < subsets; ++s) {
    VertexMask X = 0;
    for (std::size_t i = 0; i < reaching.size(); ++i)
      if (s >> i & 1) X |= reaching[i];
    const VertexMask free = top & ~X;
    // Submasks of `free` in increasing order.
    VertexMask Y = 0;
    for (;;) {
      const VertexMask U = X | Y;
      int whole = 0;
      for (auto b : top_only)
        if ((b & ~Y) == 0) ++whole;
      const int power = std::popcount(U & top) - whole;
      out.push_back({X, Y, U, signed_inverse_power(std::popcount(U), power)});
      if (Y == free) break;
      Y = (Y - free) & free;
    }
  }
  return out;
}

LinComb bar_expand(const Diagram& d, bool singleton_as_zero) {
  if (d.has_isolated()) {
    if (singleton_as_zero) return LinComb(d.k(), BasisTag::bracket);
    throw std::invalid_argument("bar of singleton diagram is zero; not a basis element");
  }
  LinComb out(d.k(), BasisTag::bracket);
  for (const auto& t : isolation_terms(d)) out.add_term(isolate(d, t.U), t.coeff);
  return out;
}

bool is_viable(const Diagram& d, VertexMask isolated) {
  const VertexMask top = top_row(d.k());
  for (auto b : d.block_masks())
    if ((b & ~top & isolated) && (b & ~isolated)) return false;
  return true;
}

RatFunc collected_coefficient(const Diagram& d, VertexMask U) {
  if (d.has_isolated()) throw std::invalid_argument("collected_coefficient: diagram has a singleton block");
  const Diagram dU = isolate(d, U);
  const VertexMask iso = dU.isolated_mask();
  if (!is_viable(d, iso)) throw std::invalid_argument("collected_coefficient: isolation is not viable");
  const VertexMask top = top_row(d.k());
  int whole_top_only = 0;
  RatFunc factor(1);
  for (auto b : d.block_masks()) {
    if ((b & iso) != b) continue;
    if (b & ~top) {
      // Fully isolated block reaching the bottom: the X route and the route
      // leaving its single bottom vertex behind cancel.
      if (std::popcount(b & ~top) == 1) return RatFunc();
    } else {
      ++whole_top_only;
      factor *= RatFunc(1 - std::popcount(b));
    }
  }
  return signed_inverse_power(std::popcount(iso), std::popcount(iso & top) - whole_top_only) * factor;
}

// ---------------------------------------------------------------------------

namespace {

LinComb extract_bar(const LinComb& bracket) {
  LinComb out(bracket.k(), BasisTag::QP_bar);
  for (const auto& [d, c] : bracket.terms())
    if (!d.has_isolated()) out.add_term(d, c);
  return out;
}

}  // namespace

LinComb qp_multiply_expanded(const LinComb& bar1, const LinComb& bar2) {
  return extract_bar(p_multiply(bar1, bar2, LoopParam::x_minus_1));
}

LinComb qp_multiply(const Diagram& d1, const Diagram& d2) {
  if (d1.k() != d2.k()) throw std::invalid_argument("qp_multiply: mismatched k");
  return qp_multiply_expanded(bar_expand(d1), bar_expand(d2));
}

LinComb bar_to_bracket(const LinComb& a) {
  if (a.tag() != BasisTag::QP_bar) throw std::invalid_argument("bar_to_bracket: expects a QP_bar combination");
  LinComb out(a.k(), BasisTag::bracket);
  for (const auto& [d, c] : a.terms()) out += scale(c, bar_expand(d));
  return out;
}

QPProductDetail qp_multiply_detailed(const Diagram& d1, const Diagram& d2) {
  if (d1.k() != d2.k()) throw std::invalid_argument("qp_multiply: mismatched k");
  QPProductDetail out;
  out.bracket_product = p_multiply(bar_expand(d1), bar_expand(d2), LoopParam::x_minus_1);
  out.result = extract_bar(out.bracket_product);
  out.residual = out.bracket_product - bar_to_bracket(out.result);
  return out;
}

LinComb qp_product(const LinComb& a, const LinComb& b) {
  if (a.tag() != BasisTag::QP_bar || b.tag() != BasisTag::QP_bar)
    throw std::invalid_argument("qp_product: expects QP_bar combinations");
  if (a.k() != b.k()) throw std::invalid_argument("qp_product: mismatched k");
  LinComb out(a.k(), BasisTag::QP_bar);
  for (const auto& [d1, c1] : a.terms())
    for (const auto& [d2, c2] : b.terms()) out += scale(c1 * c2, qp_multiply(d1, d2));
  return out;
}

// ---------------------------------------------------------------------------

const LinComb& StructureTable::product(const Diagram& d1, const Diagram& d2) const {
  auto index = [&](const Diagram& d) {
    auto it = std::lower_bound(basis.begin(), basis.end(), d);
    if (it == basis.end() || !(*it == d)) throw std::invalid_argument("not a basis diagram: " + to_string(d));
    return static_cast<std::size_t>(it - basis.begin());
  };
  return at(index(d1), index(d2));
}

std::string structure_table_filename(int k) {
  return "qp_structure_k" + std::to_string(k) + "_v" + std::to_string(kStructureCacheVersion) + ".json";
}

nlohmann::json to_json(const StructureTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  const std::size_t m = t.basis.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      arr.push_back({{"d1", to_json(t.basis[i])}, {"d2", to_json(t.basis[j])}, {"result", to_json(t.at(i, j))}});
  return arr;
}

StructureTable structure_table_from_json(const nlohmann::json& j, int k) {
  StructureTable t;
  t.k = k;
  t.basis = enumerate_basis_QP(k);
  const std::size_t m = t.basis.size();
  if (!j.is_array() || j.size() != m * m) throw std::invalid_argument("structure table JSON has wrong size");
  t.entries.assign(m * m, LinComb(k, BasisTag::QP_bar));
  std::size_t idx = 0;
  for (const auto& e : j) {
    const std::size_t i = idx / m, jj = idx % m;
    if (!(diagram_from_json(e.at("d1")) == t.basis[i]) || !(diagram_from_json(e.at("d2")) == t.basis[jj]))
      throw std::invalid_argument("structure table JSON out of order");
    t.entries[idx] = lincomb_from_json(e.at("result"), k, BasisTag::QP_bar);
    ++idx;
  }
  return t;
}

StructureTable qp_structure_table(int k, unsigned threads, const std::string& cache_dir, int max_k) {
  if (k < 1 || k > max_k)
    throw std::invalid_argument("structure table requested for k=" + std::to_string(k) + " above bound " +
                                std::to_string(max_k));
  namespace fs = std::filesystem;
  fs::path cache;
  if (!cache_dir.empty()) {
    cache = fs::path(cache_dir) / structure_table_filename(k);
    if (fs::exists(cache)) {
      try {
        std::ifstream in(cache);
        return structure_table_from_json(nlohmann::json::parse(in), k);
      } catch (const std::exception&) {
        // Stale or damaged cache: rebuild below.
      }
    }
  }
  StructureTable t;
  t.k = k;
  t.basis = enumerate_basis_QP(k);
  const std::size_t m = t.basis.size();
  std::vector<LinComb> bars;
  bars.reserve(m);
  for (const auto& d : t.basis) bars.push_back(bar_expand(d));
  t.entries.assign(m * m, LinComb(k, BasisTag::QP_bar));
  parallel_for(m * m, threads, [&](std::size_t idx) {
    t.entries[idx] = qp_multiply_expanded(bars[idx / m], bars[idx % m]);
  });
  if (!cache.empty()) {
    fs::create_directories(cache.parent_path());
    const fs::path tmp = cache.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << to_json(t).dump() << '\n';
    }
    fs::rename(tmp, cache);
  }
  return t;
}

// ---------------------------------------------------------------------------

RatFunc top_term_coefficient(const Diagram& g, const Diagram& d) {
  const Diagram top = compose(g, d).diagram;
  if (top.has_isolated()) return RatFunc();
  return qp_multiply(g, d).coefficient(top);
}

std::vector<TopTermCase> top_term_cases() {
  const RatFunc n = RatFunc::variable();
  const RatFunc one(1), zero;
  auto D = [](const char* text, int k) { return parse_diagram(text, k); };
  std::vector<TopTermCase> out;
  auto add = [&](std::string name, char g, int k, Diagram d, RatFunc printed) {
    out.push_back({std::move(name), generator(g, 1, k), std::move(d), std::move(printed)});
  };
  // e_1 on the left.
  add("e1: 1 and 2 in separate blocks", 'e', 2, Diagram::identity(2), one);
  add("e1: {1,2} is a block", 'e', 2, generator('e', 1, 2), n - 1);
  add("e1: {1,2,m'} is a block", 'e', 3, generator('t', 1, 3), zero);
  add("e1: 1,2 in a block of size >= 4", 'e', 2, generator('b', 1, 2), (n - 1) / n);
  // b_1 on the left.
  add("b1: 1 and 2 in separate blocks", 'b', 2, Diagram::identity(2), one);
  add("b1: {1,2} is a block", 'b', 2, generator('e', 1, 2), (n - 1) / n);
  add("b1: {1,2,m'} is a block", 'b', 3, generator('t', 1, 3), (n - 2) / n);
  add("b1: 1,2 in a block of size >= 4", 'b', 2, generator('b', 1, 2), (n - 1) * (n - 1) / (n * n));
  // t_1 on the left.
  add("t1: 2 and 3 in separate blocks", 't', 3, Diagram::identity(3), one);
  add("t1: {2,3} is a block", 't', 3, generator('e', 2, 3), zero);
  add("t1: 2,3 in a larger block", 't', 3, generator('b', 2, 3), (n - 2) / n);
  // h_1 on the left.
  add("h1: 1,2,3 in separate blocks", 'h', 3, Diagram::identity(3), one);
  add("h1: {1,2} a block, 3 in a block of size 2", 'h', 3, D("{1,2|3,1'|2',3'}", 3), zero);
  add("h1: {1,2} a block, 3 in a larger block", 'h', 3, D("{1,2|3,1',2',3'}", 3), (n - 1) * (n - 2));
  add("h1: 1,2 together in a larger block, 3 apart", 'h', 3, generator('t', 1, 3), (n - 2) / n);
  add("h1: {1,2,3} is a block", 'h', 3, generator('h', 1, 3), (n - 2) * (n - 1) / n);
  add("h1: {1,2,3,m'} is a block", 'h', 3, D("{1,2,3,1'|2',3'}", 3), zero);
  add("h1: 1,2,3 in a block of size >= 5", 'h', 3, D("{1,2,3,1',2',3'}", 3), (n - 1) * (n - 2) / (n * n));
  return out;
}

// ---------------------------------------------------------------------------

LinComb bar_word_product(const std::string& word, int k) {
  LinComb acc = LinComb::identity(k, BasisTag::QP_bar);
  for (const auto& letter : parse_word(word, k).letters)
    acc = qp_product(acc, LinComb::single(letter_diagram(letter, k), BasisTag::QP_bar));
  return acc;
}

std::vector<RelationCheck> verify_relations(int k) {
  std::vector<RelationCheck> out;
  const RatFunc n = RatFunc::variable();
  auto bar = [&](char g, int i) { return LinComb::single(generator(g, i, k), BasisTag::QP_bar); };
  auto w = [&](const std::string& word) { return bar_word_product(word, k); };
  auto L = [](char g, int i) { return std::string(1, g) + std::to_string(i); };
  auto check = [&](const std::string& name, const LinComb& lhs, const LinComb& rhs) {
    RelationCheck r{name, lhs == rhs, ""};
    if (!r.pass) r.detail = "lhs = " + to_string(lhs) + "; rhs = " + to_string(rhs);
    out.push_back(std::move(r));
  };
  const LinComb zero(k, BasisTag::QP_bar);
  const LinComb one = LinComb::identity(k, BasisTag::QP_bar);

  for (int i = 1; i + 1 <= k; ++i) {
    const std::string s = L('s', i), e = L('e', i), b = L('b', i);
    check(s + "^2 = 1", w(s + " " + s), one);
    check(e + "^2 = (n-1) " + e, w(e + " " + e), scale(n - 1, bar('e', i)));
    check(b + "^2 = (n-2)/n " + b + " + 1/n^2 " + e, w(b + " " + b),
          scale((n - 2) / n, bar('b', i)) + scale(RatFunc(1) / (n * n), bar('e', i)));
    check(s + " " + b + " = " + b, w(s + " " + b), bar('b', i));
    check(b + " " + s + " = " + b, w(b + " " + s), bar('b', i));
  }
  for (int i = 1; i + 2 <= k; ++i) {
    const std::string s = L('s', i), s1 = L('s', i + 1), e = L('e', i), e1 = L('e', i + 1), t = L('t', i);
    check(s + " " + s1 + " " + s + " = " + s1 + " " + s + " " + s1, w(s + " " + s1 + " " + s),
          w(s1 + " " + s + " " + s1));
    check(e + " " + e1 + " " + e + " = " + e, w(e + " " + e1 + " " + e), bar('e', i));
    check(e1 + " " + e + " " + e1 + " = " + e1, w(e1 + " " + e + " " + e1), bar('e', i + 1));
    check(s + " " + t + " = " + t, w(s + " " + t), bar('t', i));
    check(t + " " + s1 + " = " + t, w(t + " " + s1), bar('t', i));
    check(e + " " + t + " = 0", w(e + " " + t), zero);
    check(t + " " + e1 + " = 0", w(t + " " + e1), zero);
  }
  for (int i = 1; i + 1 <= k; ++i)
    for (int j = i + 2; j + 1 <= k; ++j) {
      const std::string si = L('s', i), sj = L('s', j);
      check(si + " " + sj + " = " + sj + " " + si, w(si + " " + sj), w(sj + " " + si));
    }
  return out;
}

}  // namespace qpa
