#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace cotrans;

TEST_CASE("presentation validation") {
  const Presentation p(3, {{3, 1}, {}});
  CHECK(p.set(1) == Subset{1, 3});
  CHECK(p.empty_sets() == std::vector<int>{2});
  CHECK_THROWS_AS(Presentation(3, {{4}}), InvalidInput);
  CHECK_THROWS_AS(Presentation(3, {{0}}), InvalidInput);
  CHECK_THROWS_AS(Presentation(3, {{1, 1}}), InvalidInput);
}

TEST_CASE("presentation to bipartite") {
  const auto h = presentation_to_bipartite(oracle::example1());
  CHECK(h.left_size == 6);
  CHECK(h.right_labels == std::vector<int>{1, 2, 3});
  CHECK(h.adjacency == std::vector<Subset>{{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  CHECK(bipartite_to_presentation(h) == oracle::example1());

  CHECK(presentation_to_bipartite(Presentation(4, {})).right_size() == 0);
  const auto single = presentation_to_bipartite(Presentation(1, {{1}}));
  CHECK(single.adjacency == std::vector<Subset>{{1}});

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_presentation(rng, 6, 4, 0.4);
    CHECK(bipartite_to_presentation(presentation_to_bipartite(p)) == p);
  }
}

TEST_CASE("max matching examples") {
  const auto h = presentation_to_bipartite(oracle::example1());
  const auto m = max_matching(h, {1, 2, 3});
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(max_matching(h, {4, 5, 6}).size() == 2);
  CHECK(max_matching(h, {}).size() == 0);
  CHECK_THROWS_AS(max_matching(h, {7}), OutOfRange);
}

TEST_CASE("max matching is maximum and deterministic") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_presentation(rng, 6, 4, 0.35);
    const auto h = presentation_to_bipartite(p);
    std::bernoulli_distribution coin(0.6);
    Subset s;
    for (int x = 1; x <= 6; ++x)
      if (coin(rng)) s.push_back(x);
    const auto m = max_matching(h, s);
    CHECK(m.size() == oracle::matching_rank(p, s));
    CHECK(m == max_matching(h, s));
    for (auto [left, right] : m.pairs) {
      CHECK(std::binary_search(s.begin(), s.end(), left));
      CHECK(std::binary_search(p.set(right).begin(), p.set(right).end(), left));
    }
  }
}

TEST_CASE("max matching is the lexicographically first complete matching") {
  const auto cycle = presentation_to_bipartite(Presentation(3, {{1, 2}, {1, 2, 3}}));
  CHECK(max_matching(cycle).pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_presentation(rng, 6, 3, 0.5);
    // First complete assignment in lexicographic order, by brute force.
    std::vector<int> pick(3, 0);
    std::vector<std::pair<int, int>> first;
    std::function<bool(int)> search = [&](int i) {
      if (i > 3) {
        for (int k = 1; k <= 3; ++k) first.emplace_back(pick[static_cast<std::size_t>(k - 1)], k);
        return true;
      }
      for (int x : p.set(i)) {
        if (std::find(pick.begin(), pick.begin() + (i - 1), x) != pick.begin() + (i - 1)) continue;
        pick[static_cast<std::size_t>(i - 1)] = x;
        if (search(i + 1)) return true;
      }
      return false;
    };
    if (!search(1)) continue;
    CHECK(max_matching(presentation_to_bipartite(p)).pairs == first);
  }
}

TEST_CASE("transversal matroid examples") {
  const Matroid m = transversal_matroid(oracle::example1());
  CHECK(m.rank() == 3);
  for (const auto& s : k_subsets(6, 3)) CHECK(m.is_basis(s) == (oracle::matching_rank(oracle::example1(), s) == 3));
  CHECK(m.is_basis({1, 2, 3}));
  CHECK_FALSE(m.is_basis({4, 5, 6}));

  CHECK(transversal_matroid(Presentation(2, {{1}, {1}})) == Matroid(2, {{1}}));
  CHECK(transversal_matroid(Presentation(3, {})) == Matroid(3, {{}}));
  CHECK(transversal_matroid(Presentation(0, {{}, {}})) == Matroid(0, {{}}));
}

TEST_CASE("transversal matroids satisfy the exchange axiom") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 8);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> r_dist(0, n);
    const auto p = oracle::random_presentation(rng, n, r_dist(rng), 0.3);
    const Matroid m = transversal_matroid(p);
    CHECK_FALSE(validate_basis_exchange(m).has_value());
    CHECK(rank_of(m, complement({}, n)) == m.rank());
  }
}

TEST_CASE("transversal representation pattern") {
  const long a = 2, b = 3, c = 5, d = 7, e = 11, f = 13;
  WeightMap<Rational> w{{{1, 1}, Rational(17)}, {{1, 2}, Rational(a)}, {{1, 3}, Rational(b)},
                        {{2, 2}, Rational(19)}, {{2, 4}, Rational(c)}, {{2, 5}, Rational(d)},
                        {{3, 3}, Rational(23)}, {{3, 5}, Rational(e)}, {{3, 6}, Rational(f)}};
  TransversalOptions normalized;
  normalized.normalize = true;
  const auto rep = transversal_representation(oracle::example1(), w, normalized);
  CHECK(rep.matrix == oracle::rational_matrix({{1, -a, -b, 0, 0, 0}, {0, 1, 0, -c, -d, 0}, {0, 0, 1, 0, -e, -f}}));
  REQUIRE(rep.normalization.has_value());
  CHECK(rep.normalization->pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(rep.weights.size() == 6);

  const auto raw = transversal_representation(oracle::example1(), w);
  CHECK(raw.matrix(0, 0) == Rational(-17));
  CHECK_FALSE(raw.normalization.has_value());

  const auto empty = transversal_representation(Presentation(4, {}), 1);
  CHECK(empty.matrix.rows() == 0);
  CHECK(empty.matrix.cols() == 4);

  WeightMap<Rational> partial = w;
  partial.erase({2, 5});
  CHECK_THROWS_AS(transversal_representation(oracle::example1(), partial), MissingWeight);

  CHECK_THROWS_AS(transversal_representation(Presentation(2, {{1}, {1}}), 1, normalized), NormalizationImpossible);

  TransversalOptions explicit_matching = normalized;
  explicit_matching.matching = Matching{{{2, 1}, {4, 2}, {6, 3}}};
  const auto alt = transversal_representation(oracle::example1(), 7, explicit_matching);
  CHECK(alt.matrix(0, 1) == Fp::one());
  CHECK(alt.matrix(1, 3) == Fp::one());
  CHECK(alt.matrix(2, 5) == Fp::one());
  explicit_matching.matching = Matching{{{4, 1}, {2, 2}, {3, 3}}};
  CHECK_THROWS_AS(transversal_representation(oracle::example1(), 7, explicit_matching), InvalidInput);
}

TEST_CASE("seeded weights are nonzero and support matches the presentation") {
  const auto p = oracle::example1();
  const auto rep = transversal_representation(p, 99);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 6; ++j) {
      const bool in_set = std::binary_search(p.set(i).begin(), p.set(i).end(), j);
      CHECK(rep.matrix(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero() == !in_set);
    }
  }
  CHECK(transversal_representation(p, 99).matrix == rep.matrix);
  CHECK_FALSE(transversal_representation(p, 100).matrix == rep.matrix);
}

TEST_CASE("column rank over F_p versus matching rank") {
  const auto p = oracle::example1();
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto x = transversal_representation(p, seed).matrix;
    auto column_rank = [&](const Subset& s) {
      std::vector<std::size_t> cols;
      for (int v : s) cols.push_back(static_cast<std::size_t>(v - 1));
      return rank(x.select_columns(cols));
    };
    CHECK(column_rank({1, 2, 5}) == 3);
    CHECK(column_rank({4, 5, 6}) == 2);
  }

  // One-sided bound always; equality for at least one of three seeds.
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> n_dist(2, 8);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> r_dist(1, n);
    const auto pres = oracle::random_presentation(rng, n, r_dist(rng), 0.35);
    std::vector<Matrix<Fp>> xs;
    for (std::uint64_t seed : {1, 2, 3}) xs.push_back(transversal_representation(pres, seed).matrix);
    for (int k = 1; k <= pres.set_count(); ++k) {
      for (const auto& s : k_subsets(n, k)) {
        std::vector<std::size_t> cols;
        for (int v : s) cols.push_back(static_cast<std::size_t>(v - 1));
        const auto truth = static_cast<std::size_t>(oracle::matching_rank(pres, s));
        bool hit = false;
        for (const auto& x : xs) {
          const auto r = rank(x.select_columns(cols));
          CHECK(r <= truth);
          hit = hit || r == truth;
        }
        CHECK(hit);
      }
    }
  }
}
