#include "qpa/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qpa {

std::string to_string(const Vertex& v) {
  std::string s = std::to_string(v.index);
  if (v.row == Row::bottom) s += '\'';
  return s;
}

Vertex parse_vertex(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t start = i;
  int value = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    value = value * 10 + (text[i] - '0');
    if (value > 1000) throw std::invalid_argument("vertex index too large");
    ++i;
  }
  if (i == start) throw std::invalid_argument("malformed vertex '" + std::string(text) + "'");
  Row row = Row::top;
  if (i < text.size() && text[i] == '\'') {
    row = Row::bottom;
    ++i;
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size() || value < 1)
    throw std::invalid_argument("malformed vertex '" + std::string(text) + "'");
  return {value, row};
}

VertexMask to_mask(std::span<const Vertex> vertices, int k) {
  VertexMask m = 0;
  for (const auto& v : vertices) {
    if (v.index < 1 || v.index > k) throw std::invalid_argument("vertex " + to_string(v) + " out of range");
    m |= VertexMask{1} << v.slot(k);
  }
  return m;
}

std::vector<Vertex> from_mask(VertexMask mask, int k) {
  std::vector<Vertex> out;
  for (int s = 0; s < 2 * k; ++s)
    if (mask >> s & 1) out.push_back(Vertex::from_slot(s, k));
  return out;
}

// ---------------------------------------------------------------------------

Diagram Diagram::from_labels(int k, std::span<const std::uint8_t> labels) {
  if (k < 0 || k > kMaxK) throw std::invalid_argument("k out of supported range");
  if (labels.size() != static_cast<std::size_t>(2 * k))
    throw std::invalid_argument("label array has wrong length");
  Diagram d;
  d.k_ = k;
  std::array<int, 256> remap;
  remap.fill(-1);
  int next = 0;
  for (int s = 0; s < 2 * k; ++s) {
    int& r = remap[labels[static_cast<std::size_t>(s)]];
    if (r < 0) r = next++;
    d.labels_[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(r);
  }
  d.blocks_ = next;
  return d;
}

Diagram Diagram::from_blocks(int k, const std::vector<Block>& blocks) {
  if (k < 0 || k > kMaxK) throw std::invalid_argument("k out of supported range");
  std::array<std::uint8_t, 2 * kMaxK> labels{};
  std::array<bool, 2 * kMaxK> seen{};
  std::uint8_t label = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    for (const auto& v : block) {
      if (v.index < 1 || v.index > k)
        throw std::invalid_argument("vertex " + to_string(v) + " out of range for k=" + std::to_string(k));
      auto s = static_cast<std::size_t>(v.slot(k));
      if (seen[s]) throw std::invalid_argument("duplicated vertex " + to_string(v));
      seen[s] = true;
      labels[s] = label;
    }
    ++label;
  }
  for (int s = 0; s < 2 * k; ++s)
    if (!seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument("missing vertex " + to_string(Vertex::from_slot(s, k)));
  return from_labels(k, {labels.data(), static_cast<std::size_t>(2 * k)});
}

Diagram Diagram::identity(int k) {
  std::array<std::uint8_t, 2 * kMaxK> labels{};
  for (int i = 0; i < k; ++i) {
    labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    labels[static_cast<std::size_t>(k + i)] = static_cast<std::uint8_t>(i);
  }
  return from_labels(k, {labels.data(), static_cast<std::size_t>(2 * k)});
}

std::vector<VertexMask> Diagram::block_masks() const {
  std::vector<VertexMask> out(static_cast<std::size_t>(blocks_), 0);
  for (int s = 0; s < 2 * k_; ++s) out[labels_[static_cast<std::size_t>(s)]] |= VertexMask{1} << s;
  return out;
}

std::vector<Block> Diagram::blocks() const {
  std::vector<Block> out(static_cast<std::size_t>(blocks_));
  for (int s = 0; s < 2 * k_; ++s)
    out[labels_[static_cast<std::size_t>(s)]].push_back(Vertex::from_slot(s, k_));
  return out;
}

VertexMask Diagram::isolated_mask() const {
  VertexMask out = 0;
  for (auto m : block_masks())
    if (std::popcount(m) == 1) out |= m;
  return out;
}

bool Diagram::has_isolated() const { return isolated_mask() != 0; }

Diagram Diagram::flipped() const {
  std::array<std::uint8_t, 2 * kMaxK> labels{};
  for (int i = 0; i < k_; ++i) {
    labels[static_cast<std::size_t>(i)] = labels_[static_cast<std::size_t>(k_ + i)];
    labels[static_cast<std::size_t>(k_ + i)] = labels_[static_cast<std::size_t>(i)];
  }
  return from_labels(k_, {labels.data(), static_cast<std::size_t>(2 * k_)});
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::array<std::uint8_t, 3 * kMaxK> parent{};
  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[p];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::uint8_t>(std::min(a, b));
  }
};

}  // namespace

ComposeResult compose(const Diagram& d1, const Diagram& d2) {
  const int k = d1.k();
  if (d2.k() != k) throw std::invalid_argument("compose: mismatched k");
  // Nodes: 0..k-1 top of d1, k..2k-1 middle, 2k..3k-1 bottom of d2.
  UnionFind uf(3 * k);
  std::array<int, 2 * kMaxK> first;
  first.fill(-1);
  for (int s = 0; s < 2 * k; ++s) {
    int& f = first[static_cast<std::size_t>(d1.label(s))];
    if (f < 0) f = s;
    else uf.unite(f, s);
  }
  first.fill(-1);
  for (int s = 0; s < 2 * k; ++s) {
    int node = s + k;
    int& f = first[static_cast<std::size_t>(d2.label(s))];
    if (f < 0) f = node;
    else uf.unite(f, node);
  }
  std::array<std::uint8_t, 2 * kMaxK> labels{};
  std::array<bool, 3 * kMaxK> outer{};
  for (int i = 0; i < k; ++i) {
    int a = uf.find(i), b = uf.find(2 * k + i);
    labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a);
    labels[static_cast<std::size_t>(k + i)] = static_cast<std::uint8_t>(b);
    outer[static_cast<std::size_t>(a)] = outer[static_cast<std::size_t>(b)] = true;
  }
  int loops = 0;
  for (int m = k; m < 2 * k; ++m)
    if (uf.find(m) == m && !outer[static_cast<std::size_t>(m)]) ++loops;
  return {Diagram::from_labels(k, {labels.data(), static_cast<std::size_t>(2 * k)}), loops};
}

bool is_refinement(const Diagram& fine, const Diagram& coarse) {
  if (fine.k() != coarse.k()) throw std::invalid_argument("is_refinement: mismatched k");
  std::array<int, 2 * kMaxK> target;
  target.fill(-1);
  for (int s = 0; s < fine.vertex_count(); ++s) {
    int& t = target[static_cast<std::size_t>(fine.label(s))];
    if (t < 0) t = coarse.label(s);
    else if (t != coarse.label(s)) return false;
  }
  return true;
}

Diagram isolate(const Diagram& d, VertexMask vertices) {
  const int k = d.k();
  std::array<std::uint8_t, 2 * kMaxK> labels{};
  int fresh = d.block_count();
  for (int s = 0; s < 2 * k; ++s)
    labels[static_cast<std::size_t>(s)] =
        (vertices >> s & 1) ? static_cast<std::uint8_t>(fresh++) : static_cast<std::uint8_t>(d.label(s));
  return Diagram::from_labels(k, {labels.data(), static_cast<std::size_t>(2 * k)});
}

Diagram isolate(const Diagram& d, std::span<const Vertex> vertices) {
  return isolate(d, to_mask(vertices, d.k()));
}

BlockSplit block_split(const Block& block) {
  BlockSplit out;
  for (const auto& v : block) (v.row == Row::top ? out.top : out.bottom).push_back(v);
  return out;
}

bool has_isolated(const Diagram& d) { return d.has_isolated(); }

std::vector<Block> top_blocks(const Diagram& d) {
  std::vector<Block> out;
  for (auto& b : d.blocks())
    if (std::none_of(b.begin(), b.end(), [](const Vertex& v) { return v.row == Row::bottom; }))
      out.push_back(std::move(b));
  return out;
}

std::vector<Block> bottom_blocks(const Diagram& d) {
  std::vector<Block> out;
  for (auto& b : d.blocks())
    if (std::none_of(b.begin(), b.end(), [](const Vertex& v) { return v.row == Row::top; }))
      out.push_back(std::move(b));
  return out;
}

// ---------------------------------------------------------------------------

bool generator_index_valid(char name, int i, int k) {
  switch (name) {
    case 's': case 'e': case 'b': return i >= 1 && i <= k - 1;
    case 'p': return i >= 1 && i <= k;
    case 't': case 'h': return i >= 1 && i <= k - 2;
    default: return false;
  }
}

Diagram generator(char name, int i, int k) {
  if (std::string_view("sebpth").find(name) == std::string_view::npos)
    throw std::invalid_argument(std::string("unknown generator '") + name + "'");
  if (!generator_index_valid(name, i, k))
    throw std::invalid_argument(std::string("generator ") + name + std::to_string(i) +
                                " out of range for k=" + std::to_string(k));
  auto T = Vertex::top;
  auto B = Vertex::bottom;
  std::vector<Block> blocks;
  int lo = i, hi = i;  // columns replaced by the pattern
  switch (name) {
    case 's':
      hi = i + 1;
      blocks = {{T(i), B(i + 1)}, {T(i + 1), B(i)}};
      break;
    case 'e':
      hi = i + 1;
      blocks = {{T(i), T(i + 1)}, {B(i), B(i + 1)}};
      break;
    case 'b':
      hi = i + 1;
      blocks = {{T(i), T(i + 1), B(i), B(i + 1)}};
      break;
    case 'p':
      blocks = {{T(i)}, {B(i)}};
      break;
    case 't':
      hi = i + 2;
      blocks = {{T(i), T(i + 1), B(i)}, {T(i + 2), B(i + 1), B(i + 2)}};
      break;
    case 'h':
      hi = i + 2;
      blocks = {{T(i), T(i + 1), T(i + 2)}, {B(i), B(i + 1), B(i + 2)}};
      break;
  }
  for (int j = 1; j <= k; ++j)
    if (j < lo || j > hi) blocks.push_back({T(j), B(j)});
  return Diagram::from_blocks(k, blocks);
}

// ---------------------------------------------------------------------------

void enumerate_setpartitions(int m, const std::function<void(std::span<const std::uint8_t>)>& visit) {
  if (m < 0) return;
  std::vector<std::uint8_t> a(static_cast<std::size_t>(m), 0);
  std::vector<std::uint8_t> mx(static_cast<std::size_t>(m), 0);  // max of a[0..i-1]
  if (m == 0) {
    visit({});
    return;
  }
  while (true) {
    visit(a);
    int i = m - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] > mx[static_cast<std::size_t>(i)]) --i;
    if (i == 0) return;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      mx[static_cast<std::size_t>(j)] =
          std::max(mx[static_cast<std::size_t>(j - 1)], a[static_cast<std::size_t>(j - 1)]);
    }
  }
}

namespace {

struct NoSingletonWalker {
  int m;
  const std::function<void(std::span<const std::uint8_t>)>& visit;
  std::vector<std::uint8_t> a;
  std::vector<int> size;

  void run(int pos, int blocks, int singletons) {
    if (singletons > m - pos) return;
    if (pos == m) {
      visit(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(b);
      int s = singletons;
      if (b == blocks) {
        ++s;
      } else if (size[static_cast<std::size_t>(b)] == 1) {
        --s;
      }
      ++size[static_cast<std::size_t>(b)];
      run(pos + 1, b == blocks ? blocks + 1 : blocks, s);
      --size[static_cast<std::size_t>(b)];
    }
  }
};

}  // namespace

void enumerate_setpartitions_no_singleton(
    int m, const std::function<void(std::span<const std::uint8_t>)>& visit) {
  if (m < 0) return;
  NoSingletonWalker w{m, visit, std::vector<std::uint8_t>(static_cast<std::size_t>(m), 0),
                      std::vector<int>(static_cast<std::size_t>(m) + 1, 0)};
  w.run(0, 0, 0);
}

std::vector<Diagram> enumerate_basis_P(int k) {
  std::vector<Diagram> out;
  enumerate_setpartitions(2 * k, [&](std::span<const std::uint8_t> rgs) {
    out.push_back(Diagram::from_labels(k, rgs));
  });
  return out;
}

std::vector<Diagram> enumerate_basis_QP(int k) {
  std::vector<Diagram> out;
  if (k <= 3) {
    for (auto& d : enumerate_basis_P(k))
      if (!d.has_isolated()) out.push_back(d);
  } else {
    enumerate_setpartitions_no_singleton(2 * k, [&](std::span<const std::uint8_t> rgs) {
      out.push_back(Diagram::from_labels(k, rgs));
    });
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const Diagram& d) {
  std::string s = "{";
  bool first_block = true;
  for (const auto& b : d.blocks()) {
    if (!first_block) s += '|';
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += to_string(b[i]);
    }
  }
  return s + "}";
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

Diagram build(const std::vector<Block>& blocks, int k) {
  if (k == 0)
    for (const auto& b : blocks)
      for (const auto& v : b) k = std::max(k, v.index);
  return Diagram::from_blocks(k, blocks);
}

}  // namespace

Diagram parse_diagram(std::string_view text, int k) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("diagram must be wrapped in braces: '" + std::string(text) + "'");
  std::string_view body(t);
  body = body.substr(1, body.size() - 2);
  std::vector<Block> blocks;
  if (!body.empty() && body.front() == '{') {
    // Nested form {{1,2},{1',2'}}.
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] != '{') throw std::invalid_argument("malformed diagram '" + std::string(text) + "'");
      std::size_t j = body.find('}', i);
      if (j == std::string_view::npos) throw std::invalid_argument("unbalanced braces in diagram");
      Block b;
      for (auto v : split(body.substr(i + 1, j - i - 1), ',')) b.push_back(parse_vertex(v));
      blocks.push_back(std::move(b));
      i = j + 1;
      if (i < body.size()) {
        if (body[i] != ',') throw std::invalid_argument("malformed diagram '" + std::string(text) + "'");
        ++i;
      }
    }
  } else if (!body.empty()) {
    for (auto part : split(body, '|')) {
      Block b;
      for (auto v : split(part, ',')) b.push_back(parse_vertex(v));
      blocks.push_back(std::move(b));
    }
  }
  return build(blocks, k);
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : d.blocks()) {
    nlohmann::json jb = nlohmann::json::array();
    for (const auto& v : b) jb.push_back(to_string(v));
    blocks.push_back(std::move(jb));
  }
  return {{"k", d.k()}, {"blocks", std::move(blocks)}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("blocks"))
    throw std::invalid_argument("diagram JSON needs fields k and blocks");
  int k = j.at("k").get<int>();
  std::vector<Block> blocks;
  for (const auto& jb : j.at("blocks")) {
    Block b;
    for (const auto& v : jb) b.push_back(parse_vertex(v.get<std::string>()));
    blocks.push_back(std::move(b));
  }
  return Diagram::from_blocks(k, blocks);
}

}  // namespace qpa
