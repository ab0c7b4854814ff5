#include "qpa/tensor_oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "qpa/parallel.hpp"

namespace qpa {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exact matrix entry overflow");
  return r;
}

i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exact matrix entry overflow");
  return r;
}

std::size_t checked_pow(int base, int k) {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) {
    out *= static_cast<std::size_t>(base);
    if (out > kOracleDimLimit) throw std::length_error("tensor dimension above oracle limit");
  }
  return out;
}

i64 to_i64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return z.get_si();
}

void require_w(int n) {
  if (n < 3) throw std::invalid_argument("W needs n >= 3");
}

}  // namespace

// ---------------------------------------------------------------------------

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.num(i, i) = 1;
  return m;
}

void ExactMatrix::set_den(i64 d) {
  if (d <= 0) throw std::invalid_argument("matrix denominator must be positive");
  den_ = d;
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  Rational q(BigInt(static_cast<long>(num(r, c))), BigInt(static_cast<long>(den_)));
  q.canonicalize();
  return q;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](i64 x) { return x == 0; });
}

void ExactMatrix::reduce() {
  i64 g = den_;
  for (i64 x : data_) {
    if (g == 1) break;
    g = std::gcd(g, x < 0 ? -x : x);
  }
  if (g <= 1) return;
  den_ /= g;
  for (auto& x : data_) x /= g;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  out.den_ = mul(a.den_, b.den_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const i64 x = a.num(i, l);
      if (!x) continue;
      const i64* brow = &b.data_[l * b.cols_];
      i64* orow = &out.data_[i * out.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (brow[j]) orow[j] = add(orow[j], mul(x, brow[j]));
    }
  out.reduce();
  return out;
}

namespace {

ExactMatrix combine(const ExactMatrix& a, const ExactMatrix& b, i64 sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  const i64 g = std::gcd(a.den(), b.den());
  const i64 fa = b.den() / g, fb = a.den() / g;
  ExactMatrix out(a.rows(), a.cols());
  out.set_den(mul(a.den(), fa));
  for (std::size_t e = 0; e < a.data().size(); ++e)
    out.data()[e] = add(mul(a.data()[e], fa), mul(sign * b.data()[e], fb));
  out.reduce();
  return out;
}

}  // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) { return combine(a, b, 1); }
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return combine(a, b, -1); }

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t e = 0; e < a.data_.size(); ++e)
    if (static_cast<i128>(a.data_[e]) * b.den_ != static_cast<i128>(b.data_[e]) * a.den_) return false;
  return true;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
  ExactMatrix out = *this;
  const i64 p = to_i64(c.get_num()), q = to_i64(c.get_den());
  for (auto& x : out.data_) x = mul(x, p);
  out.den_ = mul(den_, q);
  out.reduce();
  return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.set_den(mul(a.den(), b.den()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const i64 x = a.num(i, j);
      if (!x) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out.num(i * b.rows() + r, j * b.cols() + c) = mul(x, b.num(r, c));
    }
  return out;
}

ExactMatrix kron_power(const ExactMatrix& a, int k) {
  ExactMatrix out = ExactMatrix::identity(1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

std::string to_string(const ExactMatrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ' ';
      s += to_string(m.at(r, c));
    }
    s += '\n';
  }
  return s;
}

std::size_t tensor_index(const std::vector<int>& labels, int base) {
  std::size_t idx = 0;
  for (int l : labels) idx = idx * static_cast<std::size_t>(base) + static_cast<std::size_t>(l);
  return idx;
}

std::vector<int> tensor_labels(std::size_t index, int base, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int t = k - 1; t >= 0; --t) {
    out[static_cast<std::size_t>(t)] = static_cast<int>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Nonzero (row, col) positions of delta(d) in dimension n: one per labelling
/// of the blocks.
std::vector<std::pair<std::size_t, std::size_t>> diagram_support(const Diagram& d, int n) {
  const int k = d.k();
  const int nb = d.block_count();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<int> assign(static_cast<std::size_t>(nb), 0);
  for (;;) {
    std::size_t row = 0, col = 0;
    for (int i = 0; i < k; ++i) {
      row = row * static_cast<std::size_t>(n) + static_cast<std::size_t>(assign[static_cast<std::size_t>(d.label(i))]);
      col = col * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(assign[static_cast<std::size_t>(d.label(k + i))]);
    }
    out.emplace_back(row, col);
    int p = nb - 1;
    while (p >= 0 && ++assign[static_cast<std::size_t>(p)] == n) assign[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
  }
  return out;
}

/// Applies a per-factor map to a tensor stored with the given axis sizes.
/// `f(in, stride_in, out, stride_out)` maps one fiber along `axis`.
template <class F>
std::vector<i64> along_axis(const std::vector<i64>& v, std::vector<int>& dims, int axis, int new_len, F&& f) {
  std::size_t outer = 1, inner = 1;
  for (int a = 0; a < axis; ++a) outer *= static_cast<std::size_t>(dims[static_cast<std::size_t>(a)]);
  for (std::size_t a = static_cast<std::size_t>(axis) + 1; a < dims.size(); ++a)
    inner *= static_cast<std::size_t>(dims[a]);
  const auto len = static_cast<std::size_t>(dims[static_cast<std::size_t>(axis)]);
  const auto nl = static_cast<std::size_t>(new_len);
  std::vector<i64> out(outer * nl * inner, 0);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t r = 0; r < inner; ++r)
      f(&v[o * len * inner + r], inner, &out[o * nl * inner + r], inner);
  dims[static_cast<std::size_t>(axis)] = new_len;
  return out;
}

}  // namespace

ExactMatrix diagram_matrix_V(const Diagram& d, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::size_t N = checked_pow(n, d.k());
  ExactMatrix m(N, N);
  for (auto [r, c] : diagram_support(d, n)) m.num(r, c) = 1;
  return m;
}

ProjectionMatrices projection_matrices(int n, int k) {
  require_w(n);
  checked_pow(n, k);
  const auto un = static_cast<std::size_t>(n);
  ExactMatrix p1(un, un), e1(un, un - 1), r1(un - 1, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) p1.num(i, j) = (i == j ? n : 0) - 1;
  p1.set_den(n);
  for (std::size_t j = 0; j + 1 < un; ++j) {
    e1.num(j + 1, j) = 1;
    e1.num(0, j) = -1;
    r1.num(j, j + 1) = 1;
  }
  return {kron_power(p1, k), kron_power(e1, k), kron_power(r1, k)};
}

ExactMatrix bracket_matrix_W(const Diagram& d, int n) {
  require_w(n);
  return diagram_matrix_V(d, n - 1);
}

ExactMatrix bar_apply(const Diagram& d, int n, const ExactMatrix& M) {
  require_w(n);
  const int k = d.k();
  const std::size_t NV = checked_pow(n, k);
  const std::size_t NW = checked_pow(n - 1, k);
  if (M.rows() != NW) throw std::invalid_argument("bar_apply: operand has the wrong number of rows");
  const auto support = diagram_support(d, n);
  ExactMatrix out(NW, M.cols());
  out.set_den(mul(M.den(), static_cast<i64>(checked_pow(n, k))));

  std::vector<i64> x(NW);
  for (std::size_t col = 0; col < M.cols(); ++col) {
    for (std::size_t r = 0; r < NW; ++r) x[r] = M.num(r, col);
    std::vector<int> dims(static_cast<std::size_t>(k), n - 1);
    std::vector<i64> v = x;
    // embed: w_i = v_i - v_1 on every factor
    for (int a = 0; a < k; ++a)
      v = along_axis(v, dims, a, n, [n](const i64* in, std::size_t si, i64* o, std::size_t so) {
        i64 sum = 0;
        for (int l = 0; l + 1 < n; ++l) {
          const i64 y = in[static_cast<std::size_t>(l) * si];
          o[static_cast<std::size_t>(l + 1) * so] = y;
          sum = add(sum, y);
        }
        o[0] = -sum;
      });
    // delta(d)
    std::vector<i64> y(NV, 0);
    for (auto [r, c] : support)
      if (v[c]) y[r] = add(y[r], v[c]);
    // n * pi on every factor, then keep labels >= 2
    for (int a = 0; a < k; ++a)
      y = along_axis(y, dims, a, n, [n](const i64* in, std::size_t si, i64* o, std::size_t so) {
        i64 sum = 0;
        for (int l = 0; l < n; ++l) sum = add(sum, in[static_cast<std::size_t>(l) * si]);
        for (int l = 0; l < n; ++l)
          o[static_cast<std::size_t>(l) * so] = add(mul(n, in[static_cast<std::size_t>(l) * si]), -sum);
      });
    for (int a = 0; a < k; ++a)
      y = along_axis(y, dims, a, n - 1, [n](const i64* in, std::size_t si, i64* o, std::size_t so) {
        for (int l = 1; l < n; ++l) o[static_cast<std::size_t>(l - 1) * so] = in[static_cast<std::size_t>(l) * si];
      });
    for (std::size_t r = 0; r < NW; ++r) out.num(r, col) = y[r];
  }
  return out;
}

ExactMatrix bar_matrix(const Diagram& d, int n) {
  require_w(n);
  return bar_apply(d, n, ExactMatrix::identity(checked_pow(n - 1, d.k())));
}

ExactMatrix permutation_action_W(const std::vector<int>& sigma, int k) {
  const int n = static_cast<int>(sigma.size());
  require_w(n);
  const auto m = static_cast<std::size_t>(n - 1);
  ExactMatrix s1(m, m);
  // s(w_j) = w_{sigma(j)} - w_{sigma(1)}, with w_1 = 0.
  for (int j = 2; j <= n; ++j) {
    const int a = sigma[static_cast<std::size_t>(j - 1)], b = sigma[0];
    if (a >= 2) s1.num(static_cast<std::size_t>(a - 2), static_cast<std::size_t>(j - 2)) += 1;
    if (b >= 2) s1.num(static_cast<std::size_t>(b - 2), static_cast<std::size_t>(j - 2)) -= 1;
  }
  checked_pow(n - 1, k);
  return kron_power(s1, k);
}

ExactMatrix lincomb_matrix_W(const LinComb& a, int n) {
  require_w(n);
  const std::size_t NW = checked_pow(n - 1, a.k());
  ExactMatrix out(NW, NW);
  for (const auto& [d, c] : a.terms()) {
    ExactMatrix m;
    switch (a.tag()) {
      case BasisTag::bracket: m = bracket_matrix_W(d, n); break;
      case BasisTag::QP_bar: m = bar_matrix(d, n); break;
      case BasisTag::P_diagram: throw std::invalid_argument("P_diagram combinations act on V, not W");
    }
    out = out + m.scaled(c.eval(n));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_p(i64 x) {
  i64 r = x % static_cast<i64>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<i64>(kPrime) : r);
}
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

/// Incremental row echelon form; add() reports whether v enlarged the span.
template <class T, class Ops>
struct Echelon {
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivot_cols;
  Ops ops;

  bool add(std::vector<T> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const T f = v[pivot_cols[r]];
      if (ops.is_zero(f)) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = ops.sub(v[c], ops.mul(f, rows[r][c]));
    }
    std::size_t pc = 0;
    while (pc < v.size() && ops.is_zero(v[pc])) ++pc;
    if (pc == v.size()) return false;
    const T inv = ops.inv(v[pc]);
    for (auto& x : v) x = ops.mul(x, inv);
    rows.push_back(std::move(v));
    pivot_cols.push_back(pc);
    return true;
  }
};

struct ModOps {
  bool is_zero(std::uint64_t x) const { return x == 0; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + kPrime - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b); }
  std::uint64_t inv(std::uint64_t a) const { return powmod(a, kPrime - 2); }
};

struct QOps {
  bool is_zero(const Rational& x) const { return x == 0; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const { return 1 / a; }
};

/// Picks entry positions whose value vectors span the basis, mod p first and
/// exactly if that falls short. Returns fewer than m positions when the
/// matrices are dependent.
std::vector<std::size_t> choose_pivots(const std::vector<ExactMatrix>& mats) {
  const std::size_t m = mats.size(), E = mats.front().data().size();
  std::vector<std::size_t> chosen;
  Echelon<std::uint64_t, ModOps> mod;
  for (std::size_t e = 0; e < E && chosen.size() < m; ++e) {
    std::vector<std::uint64_t> v(m);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) any |= (v[i] = mod_p(mats[i].data()[e])) != 0;
    if (any && mod.add(std::move(v))) chosen.push_back(e);
  }
  if (chosen.size() == m) return chosen;
  chosen.clear();
  Echelon<Rational, QOps> exact;
  for (std::size_t e = 0; e < E && chosen.size() < m; ++e) {
    std::vector<Rational> v(m);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = Rational(static_cast<long>(mats[i].data()[e]));
      any |= v[i] != 0;
    }
    if (any && exact.add(std::move(v))) chosen.push_back(e);
  }
  return chosen;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw std::runtime_error("basis not independent at this n");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational f = 1 / a[c][c];
    for (std::size_t j = 0; j < m; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational g = a[r][c];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] -= g * a[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

int bits(const BigInt& z) { return z == 0 ? 0 : static_cast<int>(mpz_sizeinbase(z.get_mpz_t(), 2)); }
int bits64(i64 x) { return x == 0 ? 0 : 64 - std::countl_zero(static_cast<std::uint64_t>(x < 0 ? -x : x)); }

}  // namespace

BarBasisSolver::BarBasisSolver(int k, int n) : k_(k), n_(n) {
  require_w(n);
  basis_ = enumerate_basis_QP(k);
  const ExactMatrix id = ExactMatrix::identity(checked_pow(n - 1, k));
  for (const auto& d : basis_) mats_.push_back(bar_apply(d, n, id));
  pivots_ = choose_pivots(mats_);
  if (pivots_.size() < basis_.size()) throw std::runtime_error("basis not independent at this n");
  std::vector<std::vector<Rational>> a(basis_.size(), std::vector<Rational>(basis_.size()));
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    for (std::size_t c = 0; c < basis_.size(); ++c) a[r][c] = Rational(static_cast<long>(mats_[c].data()[pivots_[r]]));
  inverse_ = invert(std::move(a));
}

std::vector<Rational> BarBasisSolver::solve(const ExactMatrix& M) const {
  if (M.rows() != mats_.front().rows() || M.cols() != mats_.front().cols())
    throw std::invalid_argument("express_in_bar_basis: matrix has the wrong shape");
  const std::size_t m = basis_.size();
  const i64 scale = mats_.front().den();  // n^k, shared by all basis matrices
  // sum_d c_d Bnum_d = scale * M
  std::vector<Rational> rhs(m);
  for (std::size_t r = 0; r < m; ++r) {
    rhs[r] = Rational(BigInt(static_cast<long>(M.data()[pivots_[r]])) * scale, BigInt(static_cast<long>(M.den())));
    rhs[r].canonicalize();
  }
  std::vector<Rational> c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (rhs[j] != 0 && inverse_[i][j] != 0) c[i] += inverse_[i][j] * rhs[j];

  // Verify every entry: Mden * sum_d a_d Bnum_d == L * scale * Mnum, c = a / L.
  BigInt L = 1;
  for (const auto& q : c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<BigInt> a(m);
  int abits = 0;
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = c[i].get_num() * (L / c[i].get_den());
    abits = std::max(abits, bits(a[i]));
  }
  int bbits = 0, mbits = 0;
  for (const auto& B : mats_)
    for (i64 x : B.data()) bbits = std::max(bbits, bits64(x));
  for (i64 x : M.data()) mbits = std::max(mbits, bits64(x));
  const int mlog = std::bit_width(m);
  const int lhs_bits = bits64(M.den()) + abits + bbits + mlog;
  const int rhs_bits = bits(L) + bits64(scale) + mbits;
  const std::size_t E = M.data().size();
  bool ok = true;
  if (abits < 63 && lhs_bits < 125 && rhs_bits < 125) {
    std::vector<i128> acc(E, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      const i128 ai = a[i].get_si();
      const auto& B = mats_[i].data();
      for (std::size_t e = 0; e < E; ++e) acc[e] += ai * B[e];
    }
    const i128 md = M.den(), rs = static_cast<i128>(L.get_si()) * scale;
    for (std::size_t e = 0; e < E && ok; ++e) ok = md * acc[e] == rs * M.data()[e];
  } else {
    const BigInt md(static_cast<long>(M.den())), rs = L * scale;
    for (std::size_t e = 0; e < E && ok; ++e) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < m; ++i) acc += a[i] * static_cast<long>(mats_[i].data()[e]);
      ok = md * acc == rs * static_cast<long>(M.data()[e]);
    }
  }
  if (!ok) throw std::runtime_error("matrix outside QP span");
  return c;
}

std::vector<Rational> express_in_bar_basis(const ExactMatrix& M, int k, int n) {
  return BarBasisSolver(k, n).solve(M);
}

std::size_t bar_basis_rank(int k, int n) {
  require_w(n);
  const ExactMatrix id = ExactMatrix::identity(checked_pow(n - 1, k));
  std::vector<ExactMatrix> mats;
  for (const auto& d : enumerate_basis_QP(k)) mats.push_back(bar_apply(d, n, id));
  return choose_pivots(mats).size();
}

// ---------------------------------------------------------------------------

Rational oracle_coefficient(const BarBasisSolver& solver, const Diagram& d1, const Diagram& d2,
                            const Diagram& target) {
  const auto& basis = solver.basis();
  auto it = std::find(basis.begin(), basis.end(), d2);
  const ExactMatrix right = it != basis.end() ? solver.basis_matrix(static_cast<std::size_t>(it - basis.begin()))
                                              : bar_matrix(d2, solver.n());
  const auto coeffs = solver.solve(bar_apply(d1, solver.n(), right));
  auto t = std::find(basis.begin(), basis.end(), target);
  return t == basis.end() ? Rational(0) : coeffs[static_cast<std::size_t>(t - basis.begin())];
}

Rational oracle_coefficient(const Diagram& d1, const Diagram& d2, const Diagram& target, int n) {
  return oracle_coefficient(BarBasisSolver(d1.k(), n), d1, d2, target);
}

OracleReport oracle_check_table(const StructureTable& table, int n, unsigned threads) {
  OracleReport rep;
  rep.k = table.k;
  rep.n = n;
  const BarBasisSolver solver(table.k, n);
  const auto& basis = solver.basis();
  const std::size_t m = basis.size();
  if (!(basis == table.basis)) throw std::logic_error("structure table basis order differs from the oracle's");
  rep.pairs = m * m;
  // One slot per pair keeps the reported failures in pair order.
  std::vector<std::string> failures(m * m);
  parallel_for(m * m, threads, [&](std::size_t idx) {
    const std::size_t i = idx / m, j = idx % m;
    std::string& failure = failures[idx];
    try {
      const auto got = solver.solve(bar_apply(basis[i], n, solver.basis_matrix(j)));
      const LinComb& sym = table.at(i, j);
      for (std::size_t t = 0; t < m; ++t) {
        const Rational want = sym.coefficient(basis[t]).eval(n);
        if (want != got[t]) {
          failure = to_string(basis[i]) + " * " + to_string(basis[j]) + ": coefficient of " +
                    to_string(basis[t]) + " is " + to_string(got[t]) + " by oracle, " + to_string(want) +
                    " symbolically";
          break;
        }
      }
    } catch (const std::exception& e) {
      failure = to_string(basis[i]) + " * " + to_string(basis[j]) + ": " + e.what();
    }
  });
  for (auto& f : failures) {
    if (f.empty()) continue;
    ++rep.mismatches;
    if (rep.failures.size() < 10) rep.failures.push_back(std::move(f));
  }
  return rep;
}

}  // namespace qpa
