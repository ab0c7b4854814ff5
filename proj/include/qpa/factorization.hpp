#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpa/diagram.hpp"

namespace qpa {

struct Letter {
  char name = 's';
  int index = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GenWord {
  int k = 0;
  std::vector<Letter> letters;
};

std::string to_string(const Letter& l);
/// "s1 e1 t1 h1"; the empty word prints as "" .
std::string to_string(const GenWord& w);
/// Throws on malformed letters or indices invalid for k.
GenWord parse_word(std::string_view text, int k);
Diagram letter_diagram(const Letter& l, int k);

/// Left-to-right composition; the empty word is the identity.
ComposeResult evaluate_word(const GenWord& w);

/// Word over s_1..s_{k-1} whose diagram joins top i to bottom perm[i-1]'.
GenWord permutation_word(const std::vector<int>& perm);
/// Word for the diagram obtained from letter g (at index 1) by relabelling
/// column j as sigma[j-1] in both rows.
GenWord conjugate_word(char g, const std::vector<int>& sigma);

struct OddReduction {
  GenWord prefix;
  Diagram rest;
  GenWord suffix;
  std::string rule;  ///< "none", "case1", "case2" or "mirrored"
};

/// One inductive step: d = prefix * rest * suffix as diagrams, where rest has
/// two fewer odd blocks than d (or d itself when all blocks are even).
OddReduction reduce_odd_blocks(const Diagram& d);

/// True when every suffix w_i ... w_m evaluates to a singleton-free diagram.
bool suffixes_singleton_free(const GenWord& w);

/// Factorisation engine for a fixed k; caches the breadth-first table of
/// all-even diagrams.
class Factorizer {
 public:
  explicit Factorizer(int k);
  int k() const noexcept { return k_; }

  /// Word over {s_1..s_{k-1}, e_1, b_1, t_1, h_1} evaluating to d, with the
  /// suffix property. Throws std::invalid_argument when d has a singleton.
  GenWord factor(const Diagram& d);
  /// True when the last factor() call needed the search fallback.
  bool used_fallback() const noexcept { return used_fallback_; }

 private:
  GenWord factor_constructive(const Diagram& d);
  GenWord even_word(const Diagram& d);
  GenWord search_word(const Diagram& d);

  int k_;
  bool used_fallback_ = false;
  std::map<Diagram, GenWord> even_table_;
  std::map<Diagram, GenWord> full_table_;
};

GenWord factor(const Diagram& d);

/// The generating set as letters.
std::vector<Letter> generator_letters(int k);

struct ClosureReport {
  int k = 0;
  std::size_t monoid_size = 0;       ///< all diagrams generated
  std::size_t reached_in_D = 0;      ///< generated diagrams without singletons
  std::size_t size_of_D = 0;         ///< |enumerate_basis_QP(k)|
  std::map<int, std::size_t> length_histogram;  ///< shortest word length -> count, over D
  std::map<Diagram, GenWord> shortest;          ///< a shortest word per diagram of D
  bool complete() const { return reached_in_D == size_of_D; }
};

/// Breadth-first search over the monoid generated by the generating set.
ClosureReport closure_check(int k, int max_k = 3);

}  // namespace qpa
