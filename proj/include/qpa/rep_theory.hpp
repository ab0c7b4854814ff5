#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qpa/rational.hpp"

namespace qpa {

/// Weakly decreasing positive parts; empty is the empty partition.
using IntPartition = std::vector<int>;

/// A box of a Young diagram, 1-based (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const IntPartition& p);  // "(2,1)", "()" for empty
IntPartition parse_partition(const std::string& text);

/// Node order used everywhere: by size, then lexicographically descending.
bool partition_before(const IntPartition& a, const IntPartition& b);

BigInt bell(int m);
/// Singleton-free set partitions of an m-set by the alternating Bell sum.
BigInt no_singleton_count_alternating(int m);
/// The same count by a(r+1) + a(r) = B(r), a(0) = 1.
BigInt no_singleton_count_recurrence(int m);
/// Both derivations; throws std::logic_error if they ever disagree.
BigInt no_singleton_count(int m);

/// All partitions of m in node order.
std::vector<IntPartition> partitions_of(int m);

/// Removable boxes, top row first.
std::vector<Cell> corners(const IntPartition& p);
/// Boxes that can be added, top row first.
std::vector<Cell> addable_cells(const IntPartition& p);
IntPartition add_cell(const IntPartition& p, const Cell& c);
IntPartition remove_cell(const IntPartition& p, const Cell& c);

/// Partitions other than p reached by adding, removing or moving one corner
/// box, in node order.
std::vector<IntPartition> alpha_pm(const IntPartition& p);

struct BratteliGraph {
  std::vector<std::vector<IntPartition>> levels;
  /// (level of source, source, target) -> multiplicity; target is on level+1.
  std::map<std::tuple<int, IntPartition, IntPartition>, int> edges;
};

BratteliGraph bratteli_graph(int max_level);
std::string bratteli_dot(const BratteliGraph& g);
nlohmann::json bratteli_json(const BratteliGraph& g);

/// Weighted number of paths from the empty partition at level 0 to p at level k.
BigInt path_count(const IntPartition& p, int k);

enum class KronMove { start, add, remove, move, stay };

struct KronStep {
  KronMove move = KronMove::start;
  IntPartition shape;
  Cell from;  ///< removed box, or the distinguished corner for stay
  Cell to;    ///< added box
};

using KroneckerTableau = std::vector<KronStep>;

std::vector<KroneckerTableau> kron_tableaux(const IntPartition& p, int k);
/// Checks the chain starts at the empty partition and each step is a legal move.
bool validate_kron_tableau(const KroneckerTableau& t);
/// Accepts chains without annotations; a repeated shape must name its corner.
KroneckerTableau make_kron_tableau(const std::vector<std::pair<IntPartition, Cell>>& chain);
std::string to_string(const KroneckerTableau& t);

BigInt hook_dim(const IntPartition& p);
BigInt binomial(int n, int r);
/// Set partitions of an a-set into b blocks, each of size at least 2.
BigInt sp2(int a, int b);
/// Closed double-sum dimension of the irreducible indexed by p at level k.
BigInt irrep_dim_formula(const IntPartition& p, int k);

}  // namespace qpa
