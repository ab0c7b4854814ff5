#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpa {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  bool informational = false;  ///< reported as NOTE, never fails the suite
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool pass() const;
};

struct VerifyOptions {
  int k = 2;
  int n = 0;             ///< 0 picks 2k + 1
  unsigned threads = 0;  ///< 0 means all cores
  std::string cache_dir;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" is not accepted here.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

/// QP basis sizes for k by the two closed forms and by enumeration.
struct DimensionCounts {
  int k = 0;
  std::string alternating, recurrence, enumerated;
};
DimensionCounts qp_dimension_counts(int k);

/// Every product of the table is supported on refinements of the diagram
/// product and leaves a zero bracket residual.
SuiteResult triangularity_suite(int k, unsigned threads, const std::string& cache_dir);

/// For each generator g and singleton-free d: g d singleton-free implies a
/// nonzero top coefficient, otherwise the whole product vanishes.
SuiteResult topterm_suite(int k, unsigned threads);

/// bar_matrix(d) commutes with `count` random permutation actions, for all d.
SuiteResult centralizer_suite(int k, int n, int count, std::uint64_t seed);

/// Path count, tableaux count and closed formula agree for |lambda| <= k, and
/// the squared dimensions sum to the singleton-free count at 2k.
SuiteResult irreps_suite(int k);

}  // namespace qpa
