#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hh/numeric.hpp"

namespace hh {

// Dense arbitrary-precision integer matrix, row-major.  Zero-row and
// zero-column shapes are first-class citizens: empty boundary maps and
// 0x0 determinants occur throughout the library.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged init list");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  const Int& operator()(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  IntVec column(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  IntVec row(std::size_t i) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  IntVec apply(const IntVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: apply length mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  IntMatrix take_columns(const std::vector<int>& idx) const {
    IntMatrix r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      std::size_t c = static_cast<std::size_t>(idx[j]);
      if (c >= cols_) throw std::out_of_range("take_columns: index out of range");
      for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, c);
    }
    return r;
  }

  IntMatrix take_rows(const std::vector<int>& idx) const {
    IntMatrix r(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      std::size_t ri = static_cast<std::size_t>(idx[i]);
      if (ri >= rows_) throw std::out_of_range("take_rows: index out of range");
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(ri, j);
    }
    return r;
  }

  IntMatrix minus_column(std::size_t drop) const {
    if (drop >= cols_) throw std::out_of_range("minus_column: index out of range");
    IntMatrix r(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j == drop) continue;
        r(i, jj++) = (*this)(i, j);
      }
    }
    return r;
  }

  // Appends `col` as the new last column.
  IntMatrix with_column(const IntVec& col) const {
    if (col.size() != rows_) throw std::invalid_argument("with_column: length mismatch");
    IntMatrix r(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      r(i, cols_) = col[i];
    }
    return r;
  }

  // Appends `row` as the new last row.
  IntMatrix with_row(const IntVec& row) const {
    if (row.size() != cols_) throw std::invalid_argument("with_row: length mismatch");
    IntMatrix r(rows_ + 1, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < cols_; ++j) r(rows_, j) = row[j];
    return r;
  }

  // Matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows_hint = 0) {
    std::size_t n = cols.empty() ? rows_hint : cols.front().size();
    IntMatrix r(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw std::invalid_argument("from_columns: ragged input");
      for (std::size_t i = 0; i < n; ++i) r(i, j) = cols[j][i];
    }
    return r;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix: index out of range");
  }

  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace hh
