#include "cotrans/linalg.hpp"

namespace cotrans {

Rational det(const Matrix<Rational>& m) {
  if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational::one();

  // Scale row i by the lcm of its denominators; det(m) = det(ints) / prod(scale).
  std::vector<mpz_class> a(n * n);
  mpz_class scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).num() * (scale / m(i, j).den());
    scale_product *= scale;
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

  int sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return Rational::zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  mpz_class result = at(n - 1, n - 1);
  if (sign < 0) result = -result;
  return Rational(result, scale_product);
}

Fp det(const Matrix<Fp>& m) {
  if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
  Matrix<Fp> a = m;
  const std::size_t n = a.rows();
  Fp result = Fp::one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Fp::zero();
    if (pivot != k) {
      a.swap_rows(pivot, k);
      result = -result;
    }
    result *= a(k, k);
    const Fp inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Fp factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return result;
}

}  // namespace cotrans
