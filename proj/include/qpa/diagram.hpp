#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qpa {

inline constexpr int kMaxK = 12;

enum class Row : std::uint8_t { top, bottom };

/// A vertex i (top) or i' (bottom), 1 <= i <= k.
struct Vertex {
  int index = 1;
  Row row = Row::top;

  static Vertex top(int i) { return {i, Row::top}; }
  static Vertex bottom(int i) { return {i, Row::bottom}; }

  /// 0-based slot: top i -> i-1, bottom i' -> k+i-1. Canonical vertex order
  /// is slot order.
  int slot(int k) const { return row == Row::top ? index - 1 : k + index - 1; }
  static Vertex from_slot(int slot, int k) {
    return slot < k ? top(slot + 1) : bottom(slot - k + 1);
  }

  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (a.row != b.row) return a.row <=> b.row;
    return a.index <=> b.index;
  }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);
Vertex parse_vertex(std::string_view text);

using Block = std::vector<Vertex>;
/// Bit s set <=> the vertex in slot s is a member.
using VertexMask = std::uint64_t;

VertexMask to_mask(std::span<const Vertex> vertices, int k);
std::vector<Vertex> from_mask(VertexMask mask, int k);

/// A set partition of {1..k, 1'..k'}. Stored as a restricted growth string
/// over the slots, which is exactly the canonical block order: blocks sorted
/// by least vertex, top row before bottom row.
class Diagram {
 public:
  Diagram() = default;

  /// Arbitrary block labels per slot; relabelled into canonical form.
  static Diagram from_labels(int k, std::span<const std::uint8_t> labels);
  /// Throws std::invalid_argument naming the first missing or duplicated vertex.
  static Diagram from_blocks(int k, const std::vector<Block>& blocks);
  static Diagram identity(int k);

  int k() const noexcept { return k_; }
  int vertex_count() const noexcept { return 2 * k_; }
  std::span<const std::uint8_t> labels() const noexcept {
    return {labels_.data(), static_cast<std::size_t>(2 * k_)};
  }
  int label(int slot) const { return labels_[static_cast<std::size_t>(slot)]; }
  int block_count() const noexcept { return blocks_; }

  std::vector<Block> blocks() const;
  /// Block masks, in canonical order.
  std::vector<VertexMask> block_masks() const;

  bool has_isolated() const;
  VertexMask isolated_mask() const;
  /// Mirror top and bottom rows.
  Diagram flipped() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.k_ == b.k_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  int k_ = 0;
  int blocks_ = 0;
  std::array<std::uint8_t, 2 * kMaxK> labels_{};
};

struct ComposeResult {
  Diagram diagram;
  int loops = 0;
};

/// d1 stacked above d2: the bottom row of d1 is glued to the top row of d2.
ComposeResult compose(const Diagram& d1, const Diagram& d2);

/// True iff every block of `fine` lies inside a block of `coarse`.
bool is_refinement(const Diagram& fine, const Diagram& coarse);

/// Every vertex of `vertices` becomes a singleton block.
Diagram isolate(const Diagram& d, VertexMask vertices);
Diagram isolate(const Diagram& d, std::span<const Vertex> vertices);

struct BlockSplit {
  Block top;
  Block bottom;
};
BlockSplit block_split(const Block& block);

bool has_isolated(const Diagram& d);
/// Blocks with no bottom vertex.
std::vector<Block> top_blocks(const Diagram& d);
/// Blocks with no top vertex.
std::vector<Block> bottom_blocks(const Diagram& d);

/// Named diagrams: s_i, e_i, b_i, t_i, h_i, p_i. Throws on an index outside
/// the family's range for k.
Diagram generator(char name, int i, int k);
bool generator_index_valid(char name, int i, int k);

/// Restricted growth strings of length m in lexicographic order.
void enumerate_setpartitions(int m, const std::function<void(std::span<const std::uint8_t>)>& visit);
/// Same order as enumerate_setpartitions, restricted to partitions with no
/// singleton block.
void enumerate_setpartitions_no_singleton(
    int m, const std::function<void(std::span<const std::uint8_t>)>& visit);

std::vector<Diagram> enumerate_basis_P(int k);
std::vector<Diagram> enumerate_basis_QP(int k);

/// "{1,2,1'|3,2',3'}".
std::string to_string(const Diagram& d);
/// k = 0 infers k from the largest index present.
Diagram parse_diagram(std::string_view text, int k = 0);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

}  // namespace qpa

template <>
struct std::hash<qpa::Diagram> {
  std::size_t operator()(const qpa::Diagram& d) const noexcept {
    std::size_t h = static_cast<std::size_t>(d.k()) * 0x9E3779B97F4A7C15ull;
    for (auto l : d.labels()) h = (h ^ l) * 0x100000001B3ull;
    return h;
  }
};
