#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilfilt {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix, row-major. Rows hold (column, value) pairs sorted by
// column with no stored zeros.
class IntegerMatrix {
 public:
  struct Entry {
    std::size_t col;
    BigInt value;
    bool operator==(const Entry&) const = default;
  };

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& rows,
                                  std::size_t cols);
  static IntegerMatrix from_dense(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  BigInt at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const BigInt& v);
  void add_to(std::size_t r, std::size_t c, const BigInt& v);

  // Replaces row r. Duplicate columns are summed and zero sums dropped.
  void set_row(std::size_t r, std::vector<std::pair<std::size_t, long long>> entries);
  // Appends a row built the same way as set_row.
  void append_row(std::vector<std::pair<std::size_t, long long>> entries);
  // Appends all rows of another matrix with the same column count.
  void append_rows(const IntegerMatrix& other);

  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }

  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  bool is_zero() const;
  bool operator==(const IntegerMatrix& other) const = default;

  std::vector<std::vector<BigInt>> to_dense() const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace nilfilt
