#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cotrans/matrix.hpp"
#include "cotrans/matroid.hpp"
#include "cotrans/weights.hpp"

namespace cotrans {

struct Edge {
  int from = 0;
  int to = 0;
  std::optional<Rational> weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed graph on [n]. Edges are kept sorted by (from, to); duplicates and
// out-of-range endpoints are rejected, as are loops unless explicitly allowed.
class WeightedDigraph {
 public:
  WeightedDigraph(int vertex_count, std::vector<Edge> edges, bool allow_loops = false);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Out-neighbors of u in ascending order.
  [[nodiscard]] const std::vector<int>& out_neighbors(int u) const {
    return out_.at(static_cast<std::size_t>(u));
  }
  [[nodiscard]] bool has_edge(int u, int v) const;
  [[nodiscard]] bool is_acyclic() const;
  // Vertices in a topological order; throws CyclicGraph.
  [[nodiscard]] std::vector<int> topological_order() const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

// Sorted, duplicate-free vertex set A.
class SinkSet {
 public:
  SinkSet() = default;
  explicit SinkSet(Subset vertices);

  [[nodiscard]] const Subset& vertices() const noexcept { return vertices_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] bool contains(int v) const;
  // Throws OutOfRange unless A is a subset of [n].
  void check_within(int n) const;

  friend bool operator==(const SinkSet&, const SinkSet&) = default;

 private:
  Subset vertices_;
};

WeightedDigraph sinkify(const WeightedDigraph& g, const SinkSet& a);
bool is_sinkified(const WeightedDigraph& g, const SinkSet& a);

// Vertex-disjoint paths (no shared vertex at all, endpoints included), sorted
// by start vertex. permutation[i] is the rank of path i's end among the ends,
// so sign is the parity of the start -> end matching.
struct Routing {
  std::vector<std::vector<int>> paths;
  std::vector<int> permutation;
  int sign = 1;

  friend bool operator==(const Routing&, const Routing&) = default;
};

// Fills permutation and sign from paths.
Routing make_routing(std::vector<std::vector<int>> paths);

struct Linkage {
  int size = 0;
  Routing witness;
};

// Maximum number of vertex-disjoint paths from distinct vertices of b to
// distinct vertices of a, by unit-capacity augmenting paths on the
// vertex-split network. Edges leaving a are ignored.
Linkage max_linkage(const WeightedDigraph& g, const SinkSet& a, const Subset& b);

// L(G, A): the |A|-subsets linkable onto A.
Matroid gammoid_matroid(const WeightedDigraph& g, const SinkSet& a);

// Edge weights for every edge, uniform nonzero F_p, ignoring explicit weights.
WeightMap<Fp> sample_edge_weights(const WeightedDigraph& g, std::uint64_t seed);
// Explicit weights where present, seeded small rationals elsewhere.
WeightMap<Rational> rational_edge_weights(const WeightedDigraph& g, std::uint64_t seed);
// rational_edge_weights with I - W nonsingular. When some edge is unweighted
// the fill is redrawn from up to `max_retries` derived seeds; fully explicit
// weights get no retry. Throws SingularSystem.
WeightMap<Rational> nonsingular_rational_edge_weights(const WeightedDigraph& g, std::uint64_t seed,
                                                      unsigned max_retries = 3);
// Explicit weights only; throws MissingWeight if any edge lacks one.
WeightMap<Rational> explicit_edge_weights(const WeightedDigraph& g);

// P = (I - W)^-1, so P(i, j) (0-based) is the sum over all paths from i+1
// to j+1 of the product of edge weights; on a DAG this is a finite sum.
// Throws SingularSystem when I - W is singular, MissingWeight for an
// unweighted edge.
template <Field F>
Matrix<F> path_sum_matrix(const WeightedDigraph& g, const WeightMap<F>& weights);

// |A| x n matrix whose row i is (p(1, a_i), ..., p(n, a_i)), computed on
// sinkify(g, a). Sink columns form an identity block.
template <Field F>
Matrix<F> gammoid_representation(const WeightedDigraph& g, const SinkSet& a,
                                 const WeightMap<F>& weights);

struct SeededGammoidRepresentation {
  Matrix<Fp> matrix;
  WeightMap<Fp> weights;
  std::uint64_t seed = 0;  // seed that produced `weights`
  unsigned attempts = 1;
};

// Over F_p with seeded weights; a singular I - W is retried with up to
// `max_retries` derived seeds before SingularSystem propagates.
SeededGammoidRepresentation gammoid_representation(const WeightedDigraph& g, const SinkSet& a,
                                                   std::uint64_t seed, unsigned max_retries = 3);

template <Field F>
struct WeightedRouting {
  Routing routing;
  F weight;
};

// Every routing from b onto a in sinkify(g, a), by backtracking; starts in
// ascending order, neighbors scanned ascending. DAG only.
template <Field F>
std::vector<WeightedRouting<F>> enumerate_routings(const WeightedDigraph& g, const SinkSet& a,
                                                   const Subset& b, const WeightMap<F>& weights);

template <Field F>
struct LgvReport {
  F determinant;
  F signed_sum;
  bool equal = false;
  std::size_t routing_count = 0;
};

// det of the columns b of the representation against the signed weighted
// routing sum.
template <Field F>
LgvReport<F> lgv_check(const WeightedDigraph& g, const SinkSet& a, const Subset& b,
                       const WeightMap<F>& weights);

}  // namespace cotrans
