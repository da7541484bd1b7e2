#include "nilfilt/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilfilt {

namespace {

using Row = std::vector<IntegerMatrix::Entry>;

Row build_row(std::vector<std::pair<std::size_t, long long>> entries, std::size_t cols) {
  std::sort(entries.begin(), entries.end());
  Row row;
  for (std::size_t i = 0; i < entries.size();) {
    const std::size_t c = entries[i].first;
    if (c >= cols) throw std::out_of_range("IntegerMatrix: column out of range");
    BigInt sum = 0;
    for (; i < entries.size() && entries[i].first == c; ++i) sum += entries[i].second;
    if (sum != 0) row.push_back({c, std::move(sum)});
  }
  return row;
}

}  // namespace

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, 1});
  return m;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long long>>& rows,
                                        std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.rows_[r].push_back({c, rows[r][c]});
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<BigInt>>& rows,
                                        std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.rows_[r].push_back({c, rows[r][c]});
  }
  return m;
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

BigInt IntegerMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const BigInt& v) {
  if (c >= cols_) throw std::out_of_range("IntegerMatrix::set column");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (v == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    row.insert(it, Entry{c, v});
  }
}

void IntegerMatrix::add_to(std::size_t r, std::size_t c, const BigInt& v) {
  set(r, c, at(r, c) + v);
}

void IntegerMatrix::set_row(std::size_t r, std::vector<std::pair<std::size_t, long long>> entries) {
  rows_.at(r) = build_row(std::move(entries), cols_);
}

void IntegerMatrix::append_row(std::vector<std::pair<std::size_t, long long>> entries) {
  rows_.push_back(build_row(std::move(entries), cols_));
}

void IntegerMatrix::append_rows(const IntegerMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("IntegerMatrix::append_rows: column mismatch");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) t.rows_[e.col].push_back({r, e.value});
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
  IntegerMatrix out(rows_.size(), rhs.cols_);
  std::vector<BigInt> acc(rhs.cols_);
  std::vector<char> touched(rhs.cols_, 0);
  std::vector<std::size_t> cols_touched;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    cols_touched.clear();
    for (const auto& a : rows_[r]) {
      for (const auto& b : rhs.rows_[a.col]) {
        if (!touched[b.col]) {
          touched[b.col] = 1;
          acc[b.col] = 0;
          cols_touched.push_back(b.col);
        }
        acc[b.col] += a.value * b.value;
      }
    }
    std::sort(cols_touched.begin(), cols_touched.end());
    for (auto c : cols_touched) {
      touched[c] = 0;
      if (acc[c] != 0) out.rows_[r].push_back({c, acc[c]});
    }
  }
  return out;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

std::vector<std::vector<BigInt>> IntegerMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> d(rows_.size(), std::vector<BigInt>(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) d[r][e.col] = e.value;
  return d;
}

}  // namespace nilfilt
