#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cotrans/gammoid.hpp"
#include "cotrans/transversal.hpp"

namespace cotrans {

// A digraph with sinks together with its bipartite counterpart H. Right
// vertex i of H is labeled by the non-sink u_i (ascending), A_i = {u_i} + N(u_i),
// and `matching` pairs u_i with position i.
struct DualPair {
  WeightedDigraph digraph;
  SinkSet sinks;
  Presentation presentation;
  std::vector<int> right_labels;
  Matching matching;

  [[nodiscard]] BipartiteGraph bipartite() const {
    return {presentation.ground_size(), right_labels, presentation.sets()};
  }
};

// Throws NotSinkified if an edge leaves a sink.
DualPair digraph_to_bipartite(const WeightedDigraph& g, const SinkSet& a);

// Recovers (G, A) from H and a complete matching (given, or max_matching(H)):
// u_i -> v for every v in A_i other than u_i, and A = [n] minus the matched
// vertices. Throws NoCompleteMatching.
DualPair bipartite_to_digraph(const Presentation& h, const std::optional<Matching>& matching = {});

// y_i == sum over out-neighbors j of alpha(i, j) * y_j at every non-sink i.
template <Field F>
bool verify_recurrence(std::span<const F> y, const WeightedDigraph& g, const SinkSet& a,
                       const WeightMap<F>& weights);

// Entry weights of X for the pair: (i, v) -> alpha(u_i, v).
template <Field F>
WeightMap<F> entry_weights_from_edges(const DualPair& pair, const WeightMap<F>& edge_weights);

template <Field F>
struct OrthogonalityReport {
  Matrix<F> x;
  Matrix<F> y;
  WeightMap<F> weights;  // edge weights shared by X and Y
  bool product_is_zero = false;
  std::size_t rank_x = 0;
  std::size_t rank_y = 0;
  bool complementary = false;
};

// X from the normalized transversal representation with the pair's matching,
// Y from the gammoid representation, both with the same edge weights.
template <Field F>
OrthogonalityReport<F> verify_orthogonality(const DualPair& pair, const WeightMap<F>& edge_weights);

// Seeded F_p weights, reseeding up to `max_retries` times on a singular I - W.
OrthogonalityReport<Fp> verify_orthogonality(const DualPair& pair, std::uint64_t seed,
                                             unsigned max_retries = 3);

struct CotransversalReport {
  bool equal;
  Matroid left;   // L(G, A)
  Matroid right;  // dual of M[H]
};

CotransversalReport verify_cotransversal_duality(const DualPair& pair);

}  // namespace cotrans
