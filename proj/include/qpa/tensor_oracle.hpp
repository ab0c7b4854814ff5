#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qpa/diagram.hpp"
#include "qpa/lincomb.hpp"
#include "qpa/quasi_partition.hpp"
#include "qpa/rational.hpp"

namespace qpa {

/// Largest tensor dimension the oracle will materialise.
inline constexpr std::size_t kOracleDimLimit = 4096;

/// Dense exact matrix: int64 numerators over one shared positive int64
/// denominator. Every operation is overflow-checked and throws
/// std::overflow_error instead of wrapping.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t den() const noexcept { return den_; }
  std::int64_t& num(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t num(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }
  std::vector<std::int64_t>& data() noexcept { return data_; }
  /// Sets the shared denominator; must be positive.
  void set_den(std::int64_t d);

  Rational at(std::size_t r, std::size_t c) const;
  bool is_zero() const;
  /// Divides out the common factor of all numerators and the denominator.
  void reduce();

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const Rational& c) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::int64_t den_ = 1;
  std::vector<std::int64_t> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron_power(const ExactMatrix& a, int k);
std::string to_string(const ExactMatrix& m);

/// Tuple (i_1..i_k) with 0-based labels, i_1 most significant.
std::size_t tensor_index(const std::vector<int>& labels, int base);
std::vector<int> tensor_labels(std::size_t index, int base, int k);

/// delta(d) on V^{(x)k}, dim V = n: rows are top-row labels (output), columns
/// bottom-row labels (input).
ExactMatrix diagram_matrix_V(const Diagram& d, int n);

struct ProjectionMatrices {
  ExactMatrix pi;        ///< (id - J/n)^{(x)k}
  ExactMatrix embed_W;   ///< w_i = v_i - v_1, i = 2..n, on each factor
  ExactMatrix restrict_W;///< keeps coordinates whose labels are all >= 2
};
ProjectionMatrices projection_matrices(int n, int k);

/// [d] in the basis w_2..w_n: delta(d) in dimension n - 1.
ExactMatrix bracket_matrix_W(const Diagram& d, int n);

/// bar(d) on W^{(x)k}: restrict_W * pi * delta(d) * embed_W.
ExactMatrix bar_matrix(const Diagram& d, int n);
/// bar_matrix(d, n) * M without materialising the V-space factors.
ExactMatrix bar_apply(const Diagram& d, int n, const ExactMatrix& M);

/// Action of sigma in S_n (one-line, 1-based) on W^{(x)k}.
ExactMatrix permutation_action_W(const std::vector<int>& sigma, int k);

/// Evaluates a bracket or bar combination at n as a W-space operator.
ExactMatrix lincomb_matrix_W(const LinComb& a, int n);

/// Expresses operators on W^{(x)k} in the basis {bar_matrix(d) : d in D}.
/// Built once per (k, n); solve() is thread-safe.
class BarBasisSolver {
 public:
  BarBasisSolver(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<Diagram>& basis() const noexcept { return basis_; }
  const ExactMatrix& basis_matrix(std::size_t i) const { return mats_[i]; }

  /// Coefficients in basis() order. Throws std::runtime_error("matrix outside
  /// QP span") when the residual is nonzero.
  std::vector<Rational> solve(const ExactMatrix& M) const;

 private:
  int k_, n_;
  std::vector<Diagram> basis_;
  std::vector<ExactMatrix> mats_;   // all with denominator n^k
  std::vector<std::size_t> pivots_; // flat entry positions
  std::vector<std::vector<Rational>> inverse_;
};

/// Coefficients of M in the bar basis at (k, n), as a QP_bar-style map.
std::vector<Rational> express_in_bar_basis(const ExactMatrix& M, int k, int n);

/// Rank of the vectorised bar matrices of D at (k, n).
std::size_t bar_basis_rank(int k, int n);

struct OracleReport {
  int k = 0;
  int n = 0;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;  ///< first few mismatch descriptions
};

/// Compares every entry of a symbolic structure table, evaluated at n, with
/// the oracle's expression of bar(d1) bar(d2).
OracleReport oracle_check_table(const StructureTable& table, int n, unsigned threads = 0);

/// Oracle coefficient of bar(target) in bar(d1) bar(d2) at n.
Rational oracle_coefficient(const Diagram& d1, const Diagram& d2, const Diagram& target, int n);

}  // namespace qpa

namespace qpa {
/// Same, reusing a solver built for (k, n).
Rational oracle_coefficient(const BarBasisSolver& solver, const Diagram& d1, const Diagram& d2,
                            const Diagram& target);
}  // namespace qpa
