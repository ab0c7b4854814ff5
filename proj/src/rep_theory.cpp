#include "qpa/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpa {

std::string to_string(const IntPartition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

IntPartition parse_partition(const std::string& text) {
  IntPartition p;
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') t += c;
  if (t.empty() || t == "0" || t == "empty") return p;
  std::istringstream in(t);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw std::invalid_argument("malformed partition '" + text + "'");
    p.push_back(std::stoi(part));
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 1 || (i && p[i] > p[i - 1])) throw std::invalid_argument("not a partition: '" + text + "'");
  return p;
}

bool partition_before(const IntPartition& a, const IntPartition& b) {
  const int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
  if (sa != sb) return sa < sb;
  return a > b;
}

// ---------------------------------------------------------------------------

BigInt bell(int m) {
  if (m < 0) throw std::invalid_argument("bell: negative argument");
  std::vector<BigInt> row{1};
  for (int i = 0; i < m; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt no_singleton_count_alternating(int m) {
  if (m < 0) throw std::invalid_argument("negative set size");
  BigInt s = (m % 2) ? -1 : 1;
  for (int j = 1; j <= m; ++j) s += ((j % 2) ? 1 : -1) * bell(m - j);
  return s;
}

BigInt no_singleton_count_recurrence(int m) {
  if (m < 0) throw std::invalid_argument("negative set size");
  BigInt a = 1;
  for (int r = 0; r < m; ++r) a = bell(r) - a;
  return a;
}

BigInt no_singleton_count(int m) {
  BigInt a = no_singleton_count_alternating(m), b = no_singleton_count_recurrence(m);
  if (a != b) throw std::logic_error("singleton-free counts disagree at m=" + std::to_string(m));
  return a;
}

std::vector<IntPartition> partitions_of(int m) {
  std::vector<IntPartition> out;
  IntPartition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Cell> corners(const IntPartition& p) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i + 1 == p.size() || p[i + 1] < p[i]) out.push_back({static_cast<int>(i) + 1, p[i]});
  return out;
}

std::vector<Cell> addable_cells(const IntPartition& p) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i <= p.size(); ++i) {
    const int len = i < p.size() ? p[i] : 0;
    if (i == 0 || p[i - 1] > len) out.push_back({static_cast<int>(i) + 1, len + 1});
  }
  return out;
}

IntPartition add_cell(const IntPartition& p, const Cell& c) {
  IntPartition q = p;
  const auto r = static_cast<std::size_t>(c.row - 1);
  if (r == q.size()) q.push_back(0);
  if (r > q.size() || q[r] + 1 != c.col || (r > 0 && q[r - 1] < c.col))
    throw std::invalid_argument("cell is not addable");
  q[r] = c.col;
  return q;
}

IntPartition remove_cell(const IntPartition& p, const Cell& c) {
  const auto r = static_cast<std::size_t>(c.row - 1);
  if (r >= p.size() || p[r] != c.col || (r + 1 < p.size() && p[r + 1] == c.col))
    throw std::invalid_argument("cell is not a corner");
  IntPartition q = p;
  if (--q[r] == 0) q.pop_back();
  return q;
}

std::vector<IntPartition> alpha_pm(const IntPartition& p) {
  std::vector<IntPartition> out;
  for (const auto& c : addable_cells(p)) out.push_back(add_cell(p, c));
  for (const auto& c : corners(p)) {
    IntPartition q = remove_cell(p, c);
    out.push_back(q);
    for (const auto& a : addable_cells(q)) {
      IntPartition r = add_cell(q, a);
      if (r != p) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), partition_before);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<IntPartition> level_nodes(int level) {
  if (level == 0) return {IntPartition{}};
  if (level == 1) return {IntPartition{1}};
  std::vector<IntPartition> out;
  for (int m = 0; m <= level; ++m)
    for (auto& p : partitions_of(m)) out.push_back(std::move(p));
  return out;
}

/// Outgoing edges of p with multiplicities, in node order.
std::vector<std::pair<IntPartition, int>> successors(const IntPartition& p) {
  std::vector<std::pair<IntPartition, int>> out;
  for (auto& q : alpha_pm(p)) out.emplace_back(std::move(q), 1);
  const int c = static_cast<int>(corners(p).size());
  if (c) out.emplace_back(p, c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return partition_before(a.first, b.first); });
  return out;
}

std::string node_id(int level, const IntPartition& p) {
  std::string s = "L" + std::to_string(level) + "_";
  if (p.empty()) return s + "e";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

BratteliGraph bratteli_graph(int max_level) {
  if (max_level < 0) throw std::invalid_argument("negative level count");
  BratteliGraph g;
  for (int l = 0; l <= max_level; ++l) g.levels.push_back(level_nodes(l));
  for (int l = 0; l < max_level; ++l)
    for (const auto& p : g.levels[static_cast<std::size_t>(l)])
      for (auto& [q, mult] : successors(p)) g.edges[{l, p, q}] = mult;
  return g;
}

std::string bratteli_dot(const BratteliGraph& g) {
  std::ostringstream out;
  out << "graph bratteli {\n";
  for (std::size_t l = 0; l < g.levels.size(); ++l) {
    out << "  { rank=same;";
    for (const auto& p : g.levels[l])
      out << " \"" << node_id(static_cast<int>(l), p) << "\" [label=\"" << to_string(p) << "\"];";
    out << " }\n";
  }
  // Edges in level, then node order.
  for (std::size_t l = 0; l + 1 < g.levels.size(); ++l)
    for (const auto& p : g.levels[l])
      for (const auto& q : g.levels[l + 1]) {
        auto it = g.edges.find({static_cast<int>(l), p, q});
        if (it == g.edges.end()) continue;
        out << "  \"" << node_id(static_cast<int>(l), p) << "\" -- \"" << node_id(static_cast<int>(l) + 1, q)
            << "\" [label=\"" << it->second << "\"];\n";
      }
  out << "}\n";
  return out.str();
}

nlohmann::json bratteli_json(const BratteliGraph& g) {
  nlohmann::json levels = nlohmann::json::array(), edges = nlohmann::json::array();
  for (std::size_t l = 0; l < g.levels.size(); ++l) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& p : g.levels[l]) nodes.push_back(p);
    levels.push_back({{"level", l}, {"nodes", nodes}});
  }
  for (std::size_t l = 0; l + 1 < g.levels.size(); ++l)
    for (const auto& p : g.levels[l])
      for (const auto& q : g.levels[l + 1]) {
        auto it = g.edges.find({static_cast<int>(l), p, q});
        if (it != g.edges.end())
          edges.push_back({{"level", l}, {"from", p}, {"to", q}, {"multiplicity", it->second}});
      }
  return {{"levels", levels}, {"edges", edges}};
}

BigInt path_count(const IntPartition& p, int k) {
  if (k < 0) return 0;
  std::map<IntPartition, BigInt> cur{{IntPartition{}, BigInt(1)}};
  for (int l = 0; l < k; ++l) {
    std::map<IntPartition, BigInt> next;
    for (const auto& [q, c] : cur)
      for (const auto& [r, mult] : successors(q)) next[r] += c * mult;
    cur = std::move(next);
  }
  auto it = cur.find(p);
  return it == cur.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------

namespace {

int size_of(const IntPartition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void tableaux_dfs(const IntPartition& target, int k, KroneckerTableau& chain, std::vector<KroneckerTableau>& out) {
  const IntPartition cur = chain.back().shape;  // chain grows below
  const int left = k - static_cast<int>(chain.size()) + 1;
  if (std::abs(size_of(cur) - size_of(target)) > left) return;
  if (left == 0) {
    if (cur == target) out.push_back(chain);
    return;
  }
  auto push = [&](KronStep s) {
    chain.push_back(std::move(s));
    tableaux_dfs(target, k, chain, out);
    chain.pop_back();
  };
  for (const auto& c : addable_cells(cur)) push({KronMove::add, add_cell(cur, c), {}, c});
  for (const auto& c : corners(cur)) {
    IntPartition q = remove_cell(cur, c);
    push({KronMove::remove, q, c, {}});
    for (const auto& a : addable_cells(q))
      if (!(a == c)) push({KronMove::move, add_cell(q, a), c, a});
  }
  for (const auto& c : corners(cur)) push({KronMove::stay, cur, c, c});
}

}  // namespace

std::vector<KroneckerTableau> kron_tableaux(const IntPartition& p, int k) {
  std::vector<KroneckerTableau> out;
  if (k < 0) return out;
  KroneckerTableau chain{{KronMove::start, {}, {}, {}}};
  tableaux_dfs(p, k, chain, out);
  return out;
}

bool validate_kron_tableau(const KroneckerTableau& t) {
  if (t.empty() || t.front().move != KronMove::start || !t.front().shape.empty()) return false;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const auto& prev = t[i - 1].shape;
    const auto& s = t[i];
    try {
      switch (s.move) {
        case KronMove::add:
          if (add_cell(prev, s.to) != s.shape) return false;
          break;
        case KronMove::remove:
          if (remove_cell(prev, s.from) != s.shape) return false;
          break;
        case KronMove::move:
          if (s.from == s.to || add_cell(remove_cell(prev, s.from), s.to) != s.shape) return false;
          break;
        case KronMove::stay: {
          auto cs = corners(prev);
          if (s.shape != prev || std::find(cs.begin(), cs.end(), s.from) == cs.end()) return false;
          break;
        }
        case KronMove::start: return false;
      }
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

KroneckerTableau make_kron_tableau(const std::vector<std::pair<IntPartition, Cell>>& chain) {
  KroneckerTableau t;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& [shape, mark] = chain[i];
    if (i == 0) {
      t.push_back({KronMove::start, shape, {}, {}});
      continue;
    }
    const auto& prev = chain[i - 1].first;
    KronStep s{KronMove::start, shape, {}, {}};
    if (shape == prev) {
      s.move = KronMove::stay;
      s.from = s.to = mark;
    } else {
      // Infer the move from the two shapes.
      bool found = false;
      for (const auto& c : addable_cells(prev))
        if (!found && add_cell(prev, c) == shape) s = {KronMove::add, shape, {}, c}, found = true;
      for (const auto& c : corners(prev)) {
        if (found) break;
        IntPartition q = remove_cell(prev, c);
        if (q == shape) {
          s = {KronMove::remove, shape, c, {}};
          found = true;
          break;
        }
        for (const auto& a : addable_cells(q))
          if (!(a == c) && add_cell(q, a) == shape) {
            s = {KronMove::move, shape, c, a};
            found = true;
            break;
          }
      }
      if (!found) s.move = KronMove::start;  // rejected by the validator
    }
    t.push_back(s);
  }
  return t;
}

std::string to_string(const KroneckerTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " -> ";
    out += to_string(t[i].shape);
    if (t[i].move == KronMove::stay)
      out += "*[" + std::to_string(t[i].from.row) + "," + std::to_string(t[i].from.col) + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------

BigInt hook_dim(const IntPartition& p) {
  BigInt num = 1, den = 1;
  int m = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 1; j <= p[i]; ++j) {
      num *= ++m;
      int leg = 0;
      for (std::size_t r = i + 1; r < p.size() && p[r] >= j; ++r) ++leg;
      den *= (p[i] - j) + leg + 1;
    }
  return num / den;
}

BigInt binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt sp2(int a, int b) {
  if (a < 0 || b < 0) return 0;
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(a) + 1, std::vector<BigInt>(static_cast<std::size_t>(b) + 1, 0));
  s[0][0] = 1;
  for (int x = 1; x <= a; ++x)
    for (int y = 0; y <= b; ++y) {
      BigInt v = y * s[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
      if (x >= 2 && y >= 1) v += (x - 1) * s[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(y - 1)];
      s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
    }
  return s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

BigInt irrep_dim_formula(const IntPartition& p, int k) {
  const int size = size_of(p);
  BigInt total = 0;
  for (int m1 = 0; m1 <= size; ++m1) {
    BigInt inner = 0;
    for (int m2 = size - m1; m2 <= (k - m1) / 2; ++m2) inner += binomial(m2, size - m1) * sp2(k - m1, m2);
    total += binomial(k, m1) * inner;
  }
  return hook_dim(p) * total;
}

}  // namespace qpa
