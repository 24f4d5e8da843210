#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cotrans/error.hpp"
#include "cotrans/scalar.hpp"

namespace cotrans {

// Dense row-major matrix over one exact field. The field is the type
// parameter, so mixing fields inside one matrix cannot be expressed.
// Indices are 0-based.
template <Field F>
class Matrix {
 public:
  using scalar_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, F::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("matrix entry count " + std::to_string(entries_.size()) +
                              " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  // Rows must all have the same length; `cols` fixes the width when there are
  // no rows at all.
  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<F> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw DimensionMismatch("ragged row list");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  [[nodiscard]] std::span<F> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const F> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  [[nodiscard]] const std::vector<F>& entries() const noexcept { return entries_; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix s(rows_, columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (columns[k] >= cols_) throw OutOfRange("column index out of range");
      for (std::size_t i = 0; i < rows_; ++i) s(i, k) = (*this)(i, columns[k]);
    }
    return s;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : entries_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> entries_;
};

template <Field F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "]\n";
  }
  return os;
}

}  // namespace cotrans
