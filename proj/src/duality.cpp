#include "cotrans/duality.hpp"

#include <algorithm>

#include "cotrans/error.hpp"
#include "cotrans/linalg.hpp"

namespace cotrans {

DualPair digraph_to_bipartite(const WeightedDigraph& g, const SinkSet& a) {
  a.check_within(g.vertex_count());
  if (!is_sinkified(g, a)) throw NotSinkified("an edge leaves a sink; sinkify first");

  std::vector<Subset> sets;
  std::vector<int> labels;
  Matching matching;
  for (int u = 1; u <= g.vertex_count(); ++u) {
    if (a.contains(u)) continue;
    Subset s = g.out_neighbors(u);
    s.insert(std::lower_bound(s.begin(), s.end(), u), u);
    sets.push_back(std::move(s));
    labels.push_back(u);
    matching.pairs.emplace_back(u, static_cast<int>(labels.size()));
  }
  return {g, a, Presentation(g.vertex_count(), std::move(sets)), std::move(labels),
          std::move(matching)};
}

DualPair bipartite_to_digraph(const Presentation& h, const std::optional<Matching>& matching) {
  Matching m = matching ? *matching : max_matching(presentation_to_bipartite(h));
  if (m.size() < h.set_count()) {
    throw NoCompleteMatching("no matching covers all " + std::to_string(h.set_count()) + " sets");
  }
  try {
    check_complete_matching(h, m);
  } catch (const InvalidInput& e) {
    throw NoCompleteMatching(e.what());
  }

  const std::vector<int> matched = m.left_of_right(h.set_count());
  std::vector<Edge> edges;
  std::vector<bool> is_matched(static_cast<std::size_t>(h.ground_size()) + 1, false);
  for (int i = 1; i <= h.set_count(); ++i) {
    const int u = matched[static_cast<std::size_t>(i - 1)];
    is_matched[static_cast<std::size_t>(u)] = true;
    for (int v : h.set(i))
      if (v != u) edges.push_back({u, v, std::nullopt});
  }
  Subset sinks;
  for (int v = 1; v <= h.ground_size(); ++v)
    if (!is_matched[static_cast<std::size_t>(v)]) sinks.push_back(v);

  return {WeightedDigraph(h.ground_size(), std::move(edges)), SinkSet(std::move(sinks)), h,
          matched, std::move(m)};
}

template <Field F>
bool verify_recurrence(std::span<const F> y, const WeightedDigraph& g, const SinkSet& a,
                       const WeightMap<F>& weights) {
  if (y.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DimensionMismatch("vector length " + std::to_string(y.size()) + " != vertex count " +
                            std::to_string(g.vertex_count()));
  }
  for (int i = 1; i <= g.vertex_count(); ++i) {
    if (a.contains(i)) continue;
    F sum = F::zero();
    for (int j : g.out_neighbors(i)) {
      const auto it = weights.find({i, j});
      if (it == weights.end()) throw MissingWeight("edge without weight");
      sum += it->second * y[static_cast<std::size_t>(j - 1)];
    }
    if (!(sum == y[static_cast<std::size_t>(i - 1)])) return false;
  }
  return true;
}

template <Field F>
WeightMap<F> entry_weights_from_edges(const DualPair& pair, const WeightMap<F>& edge_weights) {
  WeightMap<F> out;
  for (std::size_t i = 0; i < pair.right_labels.size(); ++i) {
    const int u = pair.right_labels[i];
    for (int v : pair.digraph.out_neighbors(u)) {
      const auto it = edge_weights.find({u, v});
      if (it == edge_weights.end()) throw MissingWeight("edge without weight");
      out.emplace(std::pair{static_cast<int>(i + 1), v}, it->second);
    }
  }
  return out;
}

template <Field F>
OrthogonalityReport<F> verify_orthogonality(const DualPair& pair, const WeightMap<F>& edge_weights) {
  TransversalOptions options;
  options.normalize = true;
  options.matching = pair.matching;
  OrthogonalityReport<F> report;
  report.x = transversal_representation(pair.presentation,
                                        entry_weights_from_edges(pair, edge_weights), options)
                 .matrix;
  report.y = gammoid_representation(pair.digraph, pair.sinks, edge_weights);
  report.weights = edge_weights;
  report.product_is_zero = matmul(report.x, report.y.transpose()).is_zero();
  report.rank_x = rank(report.x);
  report.rank_y = rank(report.y);
  const auto n = static_cast<std::size_t>(pair.digraph.vertex_count());
  const auto r = static_cast<std::size_t>(pair.presentation.set_count());
  report.complementary = report.product_is_zero && report.rank_x == r && report.rank_y == n - r;
  return report;
}

OrthogonalityReport<Fp> verify_orthogonality(const DualPair& pair, std::uint64_t seed,
                                             unsigned max_retries) {
  const auto y = gammoid_representation(pair.digraph, pair.sinks, seed, max_retries);
  return verify_orthogonality(pair, y.weights);
}

CotransversalReport verify_cotransversal_duality(const DualPair& pair) {
  Matroid left = gammoid_matroid(pair.digraph, pair.sinks);
  Matroid right = dual(transversal_matroid(pair.presentation));
  const bool same = left == right;
  return {same, std::move(left), std::move(right)};
}

#define COTRANS_INSTANTIATE(F)                                                                   \
  template bool verify_recurrence(std::span<const F>, const WeightedDigraph&, const SinkSet&,   \
                                  const WeightMap<F>&);                                          \
  template WeightMap<F> entry_weights_from_edges(const DualPair&, const WeightMap<F>&);          \
  template OrthogonalityReport<F> verify_orthogonality(const DualPair&, const WeightMap<F>&);

COTRANS_INSTANTIATE(Fp)
COTRANS_INSTANTIATE(Rational)

#undef COTRANS_INSTANTIATE

}  // namespace cotrans
