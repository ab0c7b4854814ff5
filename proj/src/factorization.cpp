#include "qpa/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpa {

std::string to_string(const Letter& l) { return std::string(1, l.name) + std::to_string(l.index); }

std::string to_string(const GenWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

GenWord parse_word(std::string_view text, int k) {
  GenWord w{k, {}};
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || std::string_view("sebpth").find(tok[0]) == std::string_view::npos ||
        !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed letter '" + tok + "'");
    Letter l{tok[0], std::stoi(tok.substr(1))};
    if (!generator_index_valid(l.name, l.index, k))
      throw std::invalid_argument("letter " + tok + " invalid for k=" + std::to_string(k));
    w.letters.push_back(l);
  }
  return w;
}

Diagram letter_diagram(const Letter& l, int k) { return generator(l.name, l.index, k); }

ComposeResult evaluate_word(const GenWord& w) {
  ComposeResult acc{Diagram::identity(w.k), 0};
  for (const auto& l : w.letters) {
    auto r = compose(acc.diagram, letter_diagram(l, w.k));
    acc.diagram = r.diagram;
    acc.loops += r.loops;
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

void append(GenWord& to, const GenWord& from) {
  to.letters.insert(to.letters.end(), from.letters.begin(), from.letters.end());
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

/// Completes a partial relabelling (images of 1..m) to a permutation of 1..k,
/// sending the remaining columns to the unused labels in increasing order.
std::vector<int> complete_permutation(const std::vector<int>& head, int k) {
  std::vector<int> p = head;
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  for (int v : head) {
    if (v < 1 || v > k || used[static_cast<std::size_t>(v)]) throw std::logic_error("bad relabelling");
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= k; ++v)
    if (!used[static_cast<std::size_t>(v)]) p.push_back(v);
  return p;
}

/// Word for P_{top^-1} g P_{bottom}: column j of g appears at top[j-1] in the
/// top row and at bottom[j-1] in the bottom row.
GenWord sandwich_word(char g, const std::vector<int>& top, const std::vector<int>& bottom) {
  const int k = static_cast<int>(top.size());
  GenWord w = permutation_word(inverse(top));
  w.letters.push_back({g, 1});
  append(w, permutation_word(bottom));
  w.k = k;
  return w;
}

GenWord checked(GenWord w, const Diagram& expected) {
  if (!(evaluate_word(w).diagram == expected))
    throw std::logic_error("internal: word " + to_string(w) + " does not evaluate to " + to_string(expected));
  return w;
}

std::vector<int> columns(VertexMask m, int k, Row row) {
  std::vector<int> out;
  for (const auto& v : from_mask(m, k))
    if (v.row == row) out.push_back(v.index);
  return out;
}

VertexMask bit(Vertex v, int k) { return VertexMask{1} << v.slot(k); }

Diagram from_masks(const std::vector<VertexMask>& masks, int k) {
  std::vector<Block> blocks;
  for (auto m : masks)
    if (m) blocks.push_back(from_mask(m, k));
  return Diagram::from_blocks(k, blocks);
}

}  // namespace

GenWord permutation_word(const std::vector<int>& perm) {
  const int k = static_cast<int>(perm.size());
  // Composing s_j after the current permutation swaps the values j, j+1 in
  // its one-line form; peel letters off the right end until the identity.
  std::vector<int> a = perm;
  std::vector<int> peeled;
  for (;;) {
    std::vector<int> pos = inverse(a);
    int j = 0;
    for (int v = 1; v < k; ++v)
      if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v - 1)]) {
        j = v;
        break;
      }
    if (!j) break;
    for (auto& x : a) {
      if (x == j) x = j + 1;
      else if (x == j + 1) x = j;
    }
    peeled.push_back(j);
  }
  GenWord w{k, {}};
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) w.letters.push_back({'s', *it});
  return w;
}

GenWord conjugate_word(char g, const std::vector<int>& sigma) { return sandwich_word(g, sigma, sigma); }

OddReduction reduce_odd_blocks(const Diagram& d) {
  const int k = d.k();
  if (d.has_isolated()) throw std::invalid_argument("reduce_odd_blocks: diagram has a singleton block");
  auto masks = d.block_masks();
  std::vector<std::size_t> odd;
  for (std::size_t b = 0; b < masks.size(); ++b)
    if (std::popcount(masks[b]) % 2) odd.push_back(b);
  OddReduction out{GenWord{k, {}}, d, GenWord{k, {}}, "none"};
  if (odd.empty()) return out;
  if (odd.size() % 2) throw std::logic_error("internal: odd number of odd blocks");

  auto tops = [&](std::size_t b) { return columns(masks[b], k, Row::top); };
  auto bottoms = [&](std::size_t b) { return columns(masks[b], k, Row::bottom); };

  // Case 1: one odd block entirely on top, another entirely on the bottom.
  for (auto I : odd)
    for (auto J : odd) {
      if (I == J || !bottoms(I).empty() || !tops(J).empty()) continue;
      auto ti = tops(I), bj = bottoms(J);
      std::vector<VertexMask> rest = masks;
      VertexMask Irest = masks[I], Jrest = masks[J];
      for (int c = 0; c < 3; ++c) {
        Irest &= ~bit(Vertex::top(ti[static_cast<std::size_t>(c)]), k);
        Jrest &= ~bit(Vertex::bottom(bj[static_cast<std::size_t>(c)]), k);
        rest.push_back(bit(Vertex::top(ti[static_cast<std::size_t>(c)]), k) |
                       bit(Vertex::bottom(bj[static_cast<std::size_t>(c)]), k));
      }
      rest[I] = Irest;
      rest[J] = Jrest;
      out.rest = from_masks(rest, k);
      out.rule = "case1";
      if (Irest) append(out.prefix, conjugate_word('b', complete_permutation({ti[0], ti[3]}, k)));
      append(out.prefix, conjugate_word('h', complete_permutation({ti[0], ti[1], ti[2]}, k)));
      if (Jrest) append(out.suffix, conjugate_word('b', complete_permutation({bj[0], bj[3]}, k)));
      return out;
    }

  // Case 2: J has two top vertices j1, j2 and I has a top vertex i.
  for (auto J : odd)
    for (auto I : odd) {
      if (I == J) continue;
      auto tj = tops(J), ti = tops(I);
      if (tj.size() < 2 || ti.empty()) continue;
      const int j1 = tj[0], j2 = tj[1], i = ti[0];
      std::vector<VertexMask> rest = masks;
      rest[J] = masks[J] & ~bit(Vertex::top(j1), k);
      rest[I] = masks[I] | bit(Vertex::top(j1), k);
      out.rest = from_masks(rest, k);
      out.rule = "case2";
      out.prefix = conjugate_word('t', complete_permutation({j2, j1, i}, k));
      return out;
    }

  // Mirror image of case 2 on the bottom row: d = rest * F.
  for (auto J : odd)
    for (auto I : odd) {
      if (I == J) continue;
      auto bj = bottoms(J), bi = bottoms(I);
      if (bj.size() < 2 || bi.empty()) continue;
      const int j1 = bj[0], j2 = bj[1], i = bi[0];
      std::vector<VertexMask> rest = masks;
      rest[J] = masks[J] & ~bit(Vertex::bottom(j1), k);
      rest[I] = masks[I] | bit(Vertex::bottom(j1), k);
      out.rest = from_masks(rest, k);
      out.rule = "mirrored";
      // F = {j1, i, i'}, {j2, j1', j2'} is t_1 with columns relabelled.
      auto top = complete_permutation({j1, i, j2}, k);
      auto bottom = top;
      bottom[0] = i;
      bottom[1] = j1;
      bottom[2] = j2;
      out.suffix = sandwich_word('t', top, bottom);
      return out;
    }
  throw std::logic_error("internal: no reduction rule applies to " + to_string(d));
}

bool suffixes_singleton_free(const GenWord& w) {
  Diagram acc = Diagram::identity(w.k);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    acc = compose(letter_diagram(*it, w.k), acc).diagram;
    if (acc.has_isolated()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Letter> generator_letters(int k) {
  std::vector<Letter> out;
  for (int i = 1; i < k; ++i) out.push_back({'s', i});
  if (k >= 2) {
    out.push_back({'e', 1});
    out.push_back({'b', 1});
  }
  if (k >= 3) {
    out.push_back({'t', 1});
    out.push_back({'h', 1});
  }
  return out;
}

namespace {

/// Shortest words by left multiplication from the identity, staying inside
/// the singleton-free diagrams, so every suffix is singleton-free.
std::map<Diagram, GenWord> left_bfs(int k, const std::vector<Letter>& letters) {
  std::map<Diagram, GenWord> table;
  std::deque<Diagram> queue;
  const Diagram id = Diagram::identity(k);
  table.emplace(id, GenWord{k, {}});
  queue.push_back(id);
  std::vector<Diagram> gens;
  for (const auto& l : letters) gens.push_back(letter_diagram(l, k));
  while (!queue.empty()) {
    Diagram cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Diagram next = compose(gens[g], cur).diagram;
      if (next.has_isolated() || table.count(next)) continue;
      GenWord w{k, {letters[g]}};
      append(w, table.at(cur));
      table.emplace(next, std::move(w));
      queue.push_back(next);
    }
  }
  return table;
}

}  // namespace

Factorizer::Factorizer(int k) : k_(k) {
  if (k < 1 || k > kMaxK) throw std::invalid_argument("factor: unsupported k");
}

GenWord Factorizer::even_word(const Diagram& d) {
  if (even_table_.empty()) {
    std::vector<Letter> letters;
    for (int i = 1; i < k_; ++i) letters.push_back({'s', i});
    if (k_ >= 2) {
      letters.push_back({'e', 1});
      letters.push_back({'b', 1});
    }
    even_table_ = left_bfs(k_, letters);
  }
  auto it = even_table_.find(d);
  if (it == even_table_.end()) throw std::runtime_error("even diagram not reached: " + to_string(d));
  return it->second;
}

GenWord Factorizer::search_word(const Diagram& d) {
  if (full_table_.empty()) full_table_ = left_bfs(k_, generator_letters(k_));
  auto it = full_table_.find(d);
  if (it == full_table_.end()) throw std::runtime_error("diagram not generated: " + to_string(d));
  return it->second;
}

GenWord Factorizer::factor_constructive(const Diagram& d) {
  OddReduction r = reduce_odd_blocks(d);
  if (r.rule == "none") return even_word(d);
  GenWord w = r.prefix;
  append(w, factor_constructive(r.rest));
  append(w, r.suffix);
  return w;
}

GenWord Factorizer::factor(const Diagram& d) {
  if (d.k() != k_) throw std::invalid_argument("factor: diagram has the wrong k");
  if (d.has_isolated()) throw std::invalid_argument("factor: diagram has a singleton block");
  used_fallback_ = false;
  try {
    GenWord w = factor_constructive(d);
    w.k = k_;
    if (evaluate_word(w).diagram == d && suffixes_singleton_free(w)) return w;
  } catch (const std::runtime_error&) {
    // fall through to the search
  }
  used_fallback_ = true;
  return checked(search_word(d), d);
}

GenWord factor(const Diagram& d) { return Factorizer(d.k()).factor(d); }

ClosureReport closure_check(int k, int max_k) {
  if (k < 1 || k > max_k) throw std::invalid_argument("closure_check: k outside the search bound");
  ClosureReport rep;
  rep.k = k;
  rep.size_of_D = enumerate_basis_QP(k).size();
  const auto letters = generator_letters(k);
  std::vector<Diagram> gens;
  for (const auto& l : letters) gens.push_back(letter_diagram(l, k));
  std::map<Diagram, GenWord> seen;
  std::deque<Diagram> queue;
  const Diagram id = Diagram::identity(k);
  seen.emplace(id, GenWord{k, {}});
  queue.push_back(id);
  while (!queue.empty()) {
    Diagram cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Diagram next = compose(gens[g], cur).diagram;
      if (seen.count(next)) continue;
      GenWord w{k, {letters[g]}};
      append(w, seen.at(cur));
      seen.emplace(next, std::move(w));
      queue.push_back(next);
    }
  }
  rep.monoid_size = seen.size();
  for (auto& [d, w] : seen) {
    if (d.has_isolated()) continue;
    ++rep.reached_in_D;
    ++rep.length_histogram[static_cast<int>(w.letters.size())];
    rep.shortest.emplace(d, w);
  }
  return rep;
}

}  // namespace qpa
