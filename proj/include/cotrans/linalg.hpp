#pragma once

#include <cstddef>
#include <vector>

#include "cotrans/matrix.hpp"

namespace cotrans {

template <Field F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
  }
  Matrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const F& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

// Reduced row echelon form together with the pivot columns, in order.
template <Field F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <Field F>
Echelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead);
    const F scale = F::one() / m(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col).is_zero()) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

// Rows form a basis of {y : m * y^T = 0}; one row per free column, with a 1
// in that column.
template <Field F>
Matrix<F> nullspace_basis(const Matrix<F>& m) {
  const auto [reduced, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix<F> basis(m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = F::one();
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(out, pivots[k]) = -reduced(k, free);
    ++out;
  }
  return basis;
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = F::one();
  }
  const auto [reduced, pivots] = row_reduce(std::move(augmented));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Singular("matrix is singular");
  }
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
  return inv;
}

// Fraction-free (Bareiss) elimination on the row-wise denominator-cleared
// integer matrix.
Rational det(const Matrix<Rational>& m);

// Gaussian elimination over F_p.
Fp det(const Matrix<Fp>& m);

inline Matrix<Fp> reduce_mod_p(const Matrix<Rational>& m) {
  std::vector<Fp> entries;
  entries.reserve(m.entries().size());
  for (const auto& x : m.entries()) entries.push_back(Fp::from_rational(x));
  return Matrix<Fp>(m.rows(), m.cols(), std::move(entries));
}

}  // namespace cotrans
