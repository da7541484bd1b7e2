#include "nilfilt/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

#include "nilfilt/errors.hpp"

namespace nilfilt {

namespace {

struct Overflow {};

// Arithmetic shims: checked for int64, plain for BigInt.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod, out;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }

inline std::int64_t negate(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}
inline BigInt negate(const BigInt& a) { return -a; }

inline std::int64_t magnitude(std::int64_t a) { return a < 0 ? negate(a) : a; }
inline BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt to_big(std::int64_t a) { return BigInt(a); }
inline BigInt to_big(const BigInt& a) { return a; }

// ---------------------------------------------------------------- dense SNF

template <class Int>
class Dense {
 public:
  Dense(std::size_t m, std::size_t n) : m_(m), n_(n), a_(m * n, Int(0)) {}
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
  }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < m_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row i -= q * row k
  void row_sub(std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(k, j) != 0) (*this)(i, j) = sub_mul((*this)(i, j), q, (*this)(k, j));
  }
  // col j -= q * col k
  void col_sub(std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < m_; ++i)
      if ((*this)(i, k) != 0) (*this)(i, j) = sub_mul((*this)(i, j), q, (*this)(i, k));
  }
  void row_add(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(k, j) != 0) (*this)(i, j) = add((*this)(i, j), (*this)(k, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = negate((*this)(i, j));
  }

 private:
  std::size_t m_, n_;
  std::vector<Int> a_;
};

// Reduces A in place to diagonal form. Row operations are mirrored on U and
// column operations on V when given. With `divisibility` the diagonal comes
// out as a chain d1 | d2 | ...; without it the caller normalizes afterwards.
template <class Int>
std::vector<Int> dense_snf(Dense<Int>& a, Dense<Int>* u, Dense<Int>* v, bool divisibility) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Int> diag;

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    a.swap_rows(i, k);
    if (u) u->swap_rows(i, k);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    a.swap_cols(j, k);
    if (v) v->swap_cols(j, k);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Global pivot: least |value|, ties by lowest (row, col).
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Int mag = magnitude(a(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        if (q != 0) {
          a.row_sub(i, t, q);
          if (u) u->row_sub(i, t, q);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col_sub(j, t, q);
          if (v) v->col_sub(j, t, q);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are all smaller than the pivot; bring the least one in.
        bool in_col = true;
        std::size_t idx = 0;
        bool have = false;
        Int small = 0;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a(i, t) == 0) continue;
          Int mag = magnitude(a(i, t));
          if (!have || mag < small) {
            have = true;
            small = mag;
            idx = i;
            in_col = true;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(t, j) == 0) continue;
          Int mag = magnitude(a(t, j));
          if (!have || mag < small) {
            have = true;
            small = mag;
            idx = j;
            in_col = false;
          }
        }
        if (in_col)
          swap_rows(t, idx);
        else
          swap_cols(t, idx);
        continue;
      }
      if (divisibility) {
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a(i, j) != 0 && a(i, j) % a(t, t) != 0) {
              a.row_add(t, i);
              if (u) u->row_add(t, i);
              fixed = true;
              break;
            }
          }
        }
        if (fixed) continue;
      }
      break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
    diag.push_back(a(t, t));
  }
  return diag;
}

// --------------------------------------------------------------- sparse phase

template <class Int>
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<Int> vals;
  std::size_t size() const { return cols.size(); }
  bool empty() const { return cols.empty(); }
  const Int* find(std::uint32_t c) const {
    auto it = std::lower_bound(cols.begin(), cols.end(), c);
    if (it == cols.end() || *it != c) return nullptr;
    return &vals[static_cast<std::size_t>(it - cols.begin())];
  }
};

// target -= f * src. Columns that appear in target for the first time are
// appended to `fresh`.
template <class Int>
void row_axpy(SparseRow<Int>& target, const Int& f, const SparseRow<Int>& src, SparseRow<Int>& scratch,
              std::vector<std::uint32_t>& fresh) {
  scratch.cols.clear();
  scratch.vals.clear();
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target.cols[i] < src.cols[j])) {
      scratch.cols.push_back(target.cols[i]);
      scratch.vals.push_back(std::move(target.vals[i]));
      ++i;
    } else if (i == target.size() || src.cols[j] < target.cols[i]) {
      scratch.cols.push_back(src.cols[j]);
      scratch.vals.push_back(negate(mul(f, src.vals[j])));
      fresh.push_back(src.cols[j]);
      ++j;
    } else {
      Int val = sub_mul(target.vals[i], f, src.vals[j]);
      if (val != 0) {
        scratch.cols.push_back(target.cols[i]);
        scratch.vals.push_back(std::move(val));
      }
      ++i;
      ++j;
    }
  }
  std::swap(target, scratch);
}

// Largest dense remainder the elimination will densify.
constexpr std::size_t kDenseLimit = 60'000'000;

template <class Int>
std::vector<BigInt> eliminate(std::vector<SparseRow<Int>> rows, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (auto c : rows[r].cols) col_rows[c].push_back(static_cast<std::uint32_t>(r));

  std::vector<char> row_dead(nrows, 0), col_dead(ncols, 0);
  for (std::size_t r = 0; r < nrows; ++r)
    if (rows[r].empty()) row_dead[r] = 1;

  using Item = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    if (col_rows[c].empty())
      col_dead[c] = 1;
    else
      heap.push({col_rows[c].size(), c});
  }

  std::size_t units = 0;
  SparseRow<Int> scratch;
  std::vector<std::uint32_t> fresh;
  std::vector<std::uint32_t> deferred;

  for (;;) {
    bool progress = false;
    while (!heap.empty()) {
      auto [count, c] = heap.top();
      heap.pop();
      if (col_dead[c]) continue;
      auto& list = col_rows[c];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      std::erase_if(list, [&](std::uint32_t r) { return row_dead[r] || rows[r].find(c) == nullptr; });
      if (list.empty()) {
        col_dead[c] = 1;
        continue;
      }
      if (list.size() > count) {
        heap.push({list.size(), c});
        continue;
      }
      std::uint32_t pivot = 0;
      bool have = false;
      for (auto r : list) {
        const Int& val = *rows[r].find(c);
        if (val != 1 && val != -1) continue;
        if (!have || rows[r].size() < rows[pivot].size()) {
          pivot = r;
          have = true;
        }
      }
      if (!have) {
        deferred.push_back(c);
        continue;
      }
      const Int pv = *rows[pivot].find(c);
      for (auto r : list) {
        if (r == pivot) continue;
        // pivot is a unit, so a_rc / a_pc = a_rc * a_pc
        const Int f = mul(*rows[r].find(c), pv);
        fresh.clear();
        row_axpy(rows[r], f, rows[pivot], scratch, fresh);
        for (auto nc : fresh) col_rows[nc].push_back(r);
        if (rows[r].empty()) row_dead[r] = 1;
      }
      list.clear();
      row_dead[pivot] = 1;
      col_dead[c] = 1;
      ++units;
      progress = true;
    }
    if (!progress || deferred.empty()) break;
    for (auto c : deferred)
      if (!col_dead[c]) heap.push({col_rows[c].size(), c});
    deferred.clear();
  }

  // Dense phase on the surviving block.
  std::vector<std::uint32_t> live_rows;
  std::vector<std::int64_t> col_index(ncols, -1);
  std::size_t live_cols = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (row_dead[r] || rows[r].empty()) continue;
    live_rows.push_back(static_cast<std::uint32_t>(r));
    for (auto c : rows[r].cols)
      if (col_index[c] < 0) col_index[c] = static_cast<std::int64_t>(live_cols++);
  }
  std::vector<BigInt> diag(units, BigInt(1));
  if (!live_rows.empty()) {
    if (live_rows.size() * live_cols > kDenseLimit)
      throw GuardExceeded("Smith normal form: dense remainder too large");
    Dense<Int> d(live_rows.size(), live_cols);
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      const auto& row = rows[live_rows[i]];
      for (std::size_t k = 0; k < row.size(); ++k)
        d(i, static_cast<std::size_t>(col_index[row.cols[k]])) = row.vals[k];
    }
    for (auto& x : dense_snf<Int>(d, nullptr, nullptr, false)) diag.push_back(to_big(magnitude(x)));
  }
  return normalize_divisibility_chain(std::move(diag));
}

template <class Int>
std::vector<SparseRow<Int>> load_rows(const IntegerMatrix& a) {
  std::vector<SparseRow<Int>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) {
      rows[r].cols.push_back(static_cast<std::uint32_t>(e.col));
      if constexpr (std::is_same_v<Int, std::int64_t>) {
        if (e.value > std::numeric_limits<std::int64_t>::max() ||
            e.value < std::numeric_limits<std::int64_t>::min())
          throw Overflow{};
        rows[r].vals.push_back(static_cast<std::int64_t>(e.value));
      } else {
        rows[r].vals.push_back(e.value);
      }
    }
  }
  return rows;
}

IntegerMatrix to_matrix(const Dense<BigInt>& d) {
  IntegerMatrix m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) m.set(i, j, d(i, j));
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  Dense<BigInt> d(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& e : a.row(r)) d(r, e.col) = e.value;
  auto u = Dense<BigInt>::identity(a.rows());
  auto v = Dense<BigInt>::identity(a.cols());
  SmithForm out;
  out.diagonal = dense_snf<BigInt>(d, &u, &v, true);
  out.S = to_matrix(d);
  out.U = to_matrix(u);
  out.V = to_matrix(v);
  return out;
}

std::vector<BigInt> invariant_factors(const IntegerMatrix& a) {
  if (a.cols() > std::numeric_limits<std::uint32_t>::max() || a.rows() > std::numeric_limits<std::uint32_t>::max())
    throw GuardExceeded("invariant_factors: matrix dimensions exceed 32-bit indices");
  try {
    return eliminate<std::int64_t>(load_rows<std::int64_t>(a), a.cols());
  } catch (const Overflow&) {
    return eliminate<BigInt>(load_rows<BigInt>(a), a.cols());
  }
}

std::size_t matrix_rank(const IntegerMatrix& a) { return invariant_factors(a).size(); }

AbelianGroup cokernel_invariants(const IntegerMatrix& a) {
  const auto diag = invariant_factors(a);
  return AbelianGroup::from_cyclic_orders(a.cols() - diag.size(), diag);
}

BigInt determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  auto m = a.to_dense();
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace nilfilt
