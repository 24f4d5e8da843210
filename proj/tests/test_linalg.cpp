#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace cotrans;
using oracle::rational_matrix;

namespace {

Matrix<Rational> random_rational(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread = 9) {
  std::uniform_int_distribution<long> num(-spread, spread);
  std::uniform_int_distribution<long> den(1, 5);
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(mpz_class(num(rng)), mpz_class(den(rng)));
  return m;
}

// Low-rank-ish matrices: random products of thin factors.
Matrix<Rational> random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<std::size_t> inner(0, std::min(rows, cols));
  const std::size_t k = inner(rng);
  return matmul(random_rational(rng, rows, k, 3), random_rational(rng, k, cols, 3));
}

// Example 2's Y at (a..f) = (2,3,5,7,11,13), transcribed from its symbolic form.
Matrix<Rational> example_y() {
  const long a = 2, b = 3, c = 5, d = 7, e = 11, f = 13;
  return rational_matrix({{a * c, c, 0, 1, 0, 0}, {a * d + b * e, d, e, 0, 1, 0}, {b * f, 0, f, 0, 0, 1}});
}

Matrix<Rational> example_x() {
  const long a = 2, b = 3, c = 5, d = 7, e = 11, f = 13;
  return rational_matrix({{1, -a, -b, 0, 0, 0}, {0, 1, 0, -c, -d, 0}, {0, 0, 1, 0, -e, -f}});
}

}  // namespace

TEST_CASE("det examples") {
  CHECK(det(Matrix<Rational>::identity(3)) == Rational(1));
  CHECK(det(Matrix<Fp>::identity(3)) == Fp::one());

  const std::vector<std::size_t> cols126{0, 1, 5};
  const auto m = example_y().select_columns(cols126);
  CHECK(m == rational_matrix({{10, 5, 0}, {47, 7, 0}, {39, 0, 1}}));
  CHECK(oracle::cofactor_det(m) == Rational(-165));
  CHECK(det(m) == Rational(-165));
  CHECK(det(m) == Rational(-3 * 5 * 11));

  // Columns {1,2,3} are dependent for every weight choice.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> w(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    const long a = w(rng), b = w(rng), c = w(rng), d = w(rng), e = w(rng), f = w(rng);
    const auto cols123 = rational_matrix({{a * c, c, 0}, {a * d + b * e, d, e}, {b * f, 0, f}});
    CHECK(det(cols123).is_zero());
  }

  CHECK_THROWS_AS(det(Matrix<Rational>(2, 3)), NonSquare);
  CHECK_THROWS_AS(det(Matrix<Fp>(3, 2)), NonSquare);
  CHECK(det(Matrix<Rational>(0, 0)) == Rational(1));
}

TEST_CASE("bareiss matches cofactor expansion on random rational matrices") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_rational(rng, n, n);
      CHECK(det(m) == oracle::cofactor_det(m));
      CHECK(det(reduce_mod_p(m)) == oracle::cofactor_det(reduce_mod_p(m)));
    }
  }
  // Zero leading pivots force row swaps.
  const auto swapped = rational_matrix({{0, 1, 2}, {0, 3, 4}, {5, 6, 7}});
  CHECK(det(swapped) == oracle::cofactor_det(swapped));
}

TEST_CASE("row swap negates det") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_rational(rng, 4, 4);
    const Rational before = det(m);
    m.swap_rows(trial % 4, (trial + 1) % 4);
    CHECK(det(m) == -before);
  }
}

TEST_CASE("rational and fp determinants agree modulo p") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> entry(-1000000, 1000000);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix<Rational> m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = Rational(entry(rng));
    CHECK(Fp::from_rational(det(m)) == det(reduce_mod_p(m)));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix<Rational>(2, 3)) == 0);
  CHECK(rank(example_x()) == 3);
  CHECK(rank(example_y()) == 3);
  CHECK(rank(reduce_mod_p(example_y())) == 3);
}

TEST_CASE("nullspace examples") {
  const auto line = rational_matrix({{1, -1}});
  const auto basis = nullspace_basis(line);
  REQUIRE(basis.rows() == 1);
  CHECK(basis(0, 0) == basis(0, 1));
  CHECK(!basis(0, 0).is_zero());

  CHECK(nullspace_basis(Matrix<Rational>::identity(4)).rows() == 0);

  // The null space of X is the row space of Y.
  const auto kernel = nullspace_basis(example_x());
  REQUIRE(kernel.rows() == 3);
  auto stack = [](const Matrix<Rational>& top, const Matrix<Rational>& bottom) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < top.rows(); ++i) rows.emplace_back(top.row(i).begin(), top.row(i).end());
    for (std::size_t i = 0; i < bottom.rows(); ++i) rows.emplace_back(bottom.row(i).begin(), bottom.row(i).end());
    return Matrix<Rational>::from_rows(rows);
  };
  CHECK(rank(stack(kernel, example_y())) == 3);
  CHECK(rank(stack(example_y(), kernel)) == 3);
}

TEST_CASE("nullspace properties on random matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_low_rank(rng, dim(rng), dim(rng));
    const auto basis = nullspace_basis(m);
    CHECK(matmul(m, basis.transpose()).is_zero());
    CHECK(rank(m) + basis.rows() == m.cols());
    CHECK(rank(basis) == basis.rows());

    const auto mp = reduce_mod_p(m);
    const auto basis_p = nullspace_basis(mp);
    CHECK(matmul(mp, basis_p.transpose()).is_zero());
    CHECK(rank(mp) + basis_p.rows() == mp.cols());
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse(Matrix<Rational>::identity(3)) == Matrix<Rational>::identity(3));
  const Rational w(mpz_class(1), mpz_class(2));
  const Rational x(mpz_class(1), mpz_class(3));
  const Matrix<Rational> one(1, 1, {Rational(1) - w * x});
  CHECK(inverse(one)(0, 0) == Rational(mpz_class(6), mpz_class(5)));
  CHECK_THROWS_AS(inverse(rational_matrix({{1, 1}, {1, 1}})), Singular);
  CHECK_THROWS_AS(inverse(Matrix<Rational>(2, 3)), NonSquare);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_rational(rng, 4, 4);
    if (det(m).is_zero()) continue;
    CHECK(matmul(m, inverse(m)) == Matrix<Rational>::identity(4));
  }
}

TEST_CASE("matmul examples") {
  const auto m = rational_matrix({{1, 2, 3}, {4, 5, 6}});
  CHECK(matmul(Matrix<Rational>::identity(2), m) == m);
  CHECK(matmul(rational_matrix({{1, 2}}), rational_matrix({{3}, {4}})) == rational_matrix({{11}}));
  CHECK(matmul(example_x(), example_y().transpose()).is_zero());
  CHECK(matmul(example_x(), example_y().transpose()) == Matrix<Rational>(3, 3));
  CHECK_THROWS_AS(matmul(m, m), DimensionMismatch);
  CHECK_THROWS_AS((Matrix<Rational>(2, 2, std::vector<Rational>(3))), DimensionMismatch);
}
