#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace cotrans;

TEST_CASE("digraph to bipartite examples") {
  const auto pair = digraph_to_bipartite(oracle::example2_graph(), oracle::example2_sinks());
  CHECK(pair.presentation == oracle::example1());
  CHECK(pair.right_labels == std::vector<int>{1, 2, 3});
  CHECK(pair.matching.pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(pair.bipartite().adjacency == oracle::example1().sets());

  const auto all_sinks = digraph_to_bipartite(WeightedDigraph(3, {}), SinkSet({1, 2, 3}));
  CHECK(all_sinks.presentation.set_count() == 0);

  const auto no_sinks = digraph_to_bipartite(WeightedDigraph(3, {}), SinkSet());
  CHECK(no_sinks.presentation == Presentation(3, {{1}, {2}, {3}}));

  const WeightedDigraph leaks(2, {{1, 2, std::nullopt}});
  CHECK_THROWS_AS(digraph_to_bipartite(leaks, SinkSet({1})), NotSinkified);
}

TEST_CASE("bipartite to digraph examples") {
  const Matching diagonal{{{1, 1}, {2, 2}, {3, 3}}};
  const auto pair = bipartite_to_digraph(oracle::example1(), diagonal);
  CHECK(pair.digraph == oracle::strip_weights(oracle::example2_graph()));
  CHECK(pair.sinks == oracle::example2_sinks());
  CHECK(bipartite_to_digraph(oracle::example1()).digraph == oracle::strip_weights(oracle::example2_graph()));

  const auto perfect = bipartite_to_digraph(Presentation(3, {{1}, {2}, {3}}));
  CHECK(perfect.digraph.edges().empty());
  CHECK(perfect.sinks.size() == 0);

  const auto two_cycle = bipartite_to_digraph(Presentation(3, {{1, 2}, {1, 2}}), Matching{{{1, 1}, {2, 2}}});
  CHECK(two_cycle.digraph == WeightedDigraph(3, {{1, 2, std::nullopt}, {2, 1, std::nullopt}}));
  CHECK(two_cycle.sinks == SinkSet({3}));

  CHECK_THROWS_AS(bipartite_to_digraph(Presentation(2, {{1}, {1}})), NoCompleteMatching);
  CHECK_THROWS_AS(bipartite_to_digraph(oracle::example1(), Matching{{{1, 1}}}), NoCompleteMatching);
}

TEST_CASE("round trip through the canonical matching") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> n_dist(0, 7);
    const int n = n_dist(rng);
    const auto a = oracle::random_sinks(rng, n);
    const auto g = sinkify(oracle::random_digraph(rng, n, 0.3), a);
    const auto pair = digraph_to_bipartite(g, a);
    const auto back = bipartite_to_digraph(pair.presentation, pair.matching);
    CHECK(back.digraph == g);
    CHECK(back.sinks == a);
    CHECK(back.right_labels == pair.right_labels);
  }
}

TEST_CASE("different complete matchings give gammoids with the same dual") {
  // A_1 = A_2 = {1,2,3} on [3]: six complete matchings.
  const Presentation h(3, {{1, 2, 3}, {1, 2, 3}});
  const Matroid target = dual(transversal_matroid(h));
  int matchings = 0;
  for (int x = 1; x <= 3; ++x) {
    for (int y = 1; y <= 3; ++y) {
      if (x == y) continue;
      const auto pair = bipartite_to_digraph(h, Matching{{{x, 1}, {y, 2}}});
      CHECK(gammoid_matroid(pair.digraph, pair.sinks) == target);
      ++matchings;
    }
  }
  CHECK(matchings == 6);
}

TEST_CASE("recurrence examples") {
  const auto g = oracle::example2_graph();
  const auto a = oracle::example2_sinks();
  const auto w = explicit_edge_weights(g);
  const std::vector<Rational> sink4{10, 5, 0, 1, 0, 0};
  CHECK(verify_recurrence<Rational>(sink4, g, a, w));
  CHECK(sink4[0] == Rational(2) * sink4[1] + Rational(3) * sink4[2]);

  const std::vector<Rational> zero(6);
  CHECK(verify_recurrence<Rational>(zero, g, a, w));

  std::vector<Rational> broken = sink4;
  broken[1] = Rational(6);
  CHECK_FALSE(verify_recurrence<Rational>(broken, g, a, w));

  const std::vector<Rational> short_row(5);
  CHECK_THROWS_AS(verify_recurrence<Rational>(short_row, g, a, w), DimensionMismatch);

  const auto y = gammoid_representation(g, a, w);
  for (std::size_t i = 0; i < y.rows(); ++i) CHECK(verify_recurrence(y.row(i), g, a, w));
}

TEST_CASE("orthogonality examples") {
  const auto pair = digraph_to_bipartite(oracle::example2_graph(), oracle::example2_sinks());
  for (std::uint64_t seed : {1, 2, 3, 77}) {
    const auto report = verify_orthogonality(pair, seed);
    CHECK(report.product_is_zero);
    CHECK(report.rank_x == 3);
    CHECK(report.rank_y == 3);
    CHECK(report.complementary);
  }

  const auto exact = verify_orthogonality(pair, explicit_edge_weights(pair.digraph));
  CHECK(exact.x == oracle::rational_matrix({{1, -2, -3, 0, 0, 0}, {0, 1, 0, -5, -7, 0}, {0, 0, 1, 0, -11, -13}}));
  CHECK(matmul(exact.x, exact.y.transpose()) == Matrix<Rational>(3, 3));
  CHECK(exact.complementary);

  const auto edgeless = verify_orthogonality(digraph_to_bipartite(WeightedDigraph(4, {}), SinkSet()), 1);
  CHECK(edgeless.x == Matrix<Fp>::identity(4));
  CHECK(edgeless.y.rows() == 0);
  CHECK(edgeless.complementary);
}

TEST_CASE("orthogonality on random DAG pairs with rational weights") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 8);
    const int n = n_dist(rng);
    const auto a = oracle::random_sinks(rng, n);
    const auto g = sinkify(oracle::random_dag(rng, n, 0.4), a);
    const auto pair = digraph_to_bipartite(g, a);
    const auto report = verify_orthogonality(pair, rational_edge_weights(g, static_cast<std::uint64_t>(trial)));
    CHECK(report.product_is_zero);
    CHECK(report.complementary);
  }
}

TEST_CASE("cotransversal duality examples") {
  const auto pair = digraph_to_bipartite(oracle::example2_graph(), oracle::example2_sinks());
  const auto report = verify_cotransversal_duality(pair);
  CHECK(report.equal);
  CHECK(transversal_matroid(pair.presentation).is_basis({1, 2, 3}));
  CHECK(report.left.is_basis({4, 5, 6}));

  const auto single = verify_cotransversal_duality(digraph_to_bipartite(WeightedDigraph(2, {}), SinkSet({1})));
  CHECK(single.left == Matroid(2, {{1}}));
  CHECK(single.right == Matroid(2, {{1}}));
  CHECK(single.equal);

  const auto degenerate = verify_cotransversal_duality(digraph_to_bipartite(WeightedDigraph(3, {}), SinkSet()));
  CHECK(degenerate.left == Matroid(3, {{}}));
  CHECK(degenerate.equal);
}
