#include "cotrans/gammoid.hpp"

#include <algorithm>
#include <numeric>

#include "cotrans/error.hpp"
#include "cotrans/linalg.hpp"

namespace cotrans {

WeightedDigraph::WeightedDigraph(int vertex_count, std::vector<Edge> edges, bool allow_loops)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0 || n_ > kMaxGroundSize) {
    throw InvalidInput("vertex count " + std::to_string(n_) + " outside [0, " +
                       std::to_string(kMaxGroundSize) + "]");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair{x.from, x.to} < std::pair{y.from, y.to};
  });
  out_.resize(static_cast<std::size_t>(n_) + 1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_) {
      throw InvalidInput("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                         " has an endpoint outside [1, " + std::to_string(n_) + "]");
    }
    if (e.from == e.to && !allow_loops) {
      throw InvalidInput("loop at vertex " + std::to_string(e.from));
    }
    if (k > 0 && edges_[k - 1].from == e.from && edges_[k - 1].to == e.to) {
      throw InvalidInput("duplicate edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
    }
    out_[static_cast<std::size_t>(e.from)].push_back(e.to);
  }
}

bool WeightedDigraph::has_edge(int u, int v) const {
  if (u < 1 || u > n_) return false;
  const auto& nb = out_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> WeightedDigraph::topological_order() const {
  std::vector<int> indegree(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& e : edges_) ++indegree[static_cast<std::size_t>(e.to)];
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = n_; v >= 1; --v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (int v : out_neighbors(u))
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  if (static_cast<int>(order.size()) != n_) throw CyclicGraph("graph has a directed cycle");
  return order;
}

bool WeightedDigraph::is_acyclic() const {
  try {
    (void)topological_order();
    return true;
  } catch (const CyclicGraph&) {
    return false;
  }
}

SinkSet::SinkSet(Subset vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidInput("sink set repeats a vertex");
  }
}

bool SinkSet::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

void SinkSet::check_within(int n) const {
  if (!vertices_.empty() && (vertices_.front() < 1 || vertices_.back() > n)) {
    throw OutOfRange("sink outside [1, " + std::to_string(n) + "]");
  }
}

WeightedDigraph sinkify(const WeightedDigraph& g, const SinkSet& a) {
  a.check_within(g.vertex_count());
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (!a.contains(e.from)) kept.push_back(e);
  return WeightedDigraph(g.vertex_count(), std::move(kept), true);
}

bool is_sinkified(const WeightedDigraph& g, const SinkSet& a) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return a.contains(e.from); });
}

Routing make_routing(std::vector<std::vector<int>> paths) {
  std::sort(paths.begin(), paths.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  std::vector<int> ends;
  for (const auto& p : paths) ends.push_back(p.back());
  std::vector<int> sorted_ends = ends;
  std::sort(sorted_ends.begin(), sorted_ends.end());

  Routing r;
  r.paths = std::move(paths);
  for (int end : ends) {
    r.permutation.push_back(static_cast<int>(
        std::lower_bound(sorted_ends.begin(), sorted_ends.end(), end) - sorted_ends.begin()));
  }
  // Parity via inversion count; routings are small.
  int inversions = 0;
  for (std::size_t i = 0; i < r.permutation.size(); ++i)
    for (std::size_t j = i + 1; j < r.permutation.size(); ++j)
      if (r.permutation[i] > r.permutation[j]) ++inversions;
  r.sign = inversions % 2 == 0 ? 1 : -1;
  return r;
}

namespace {

// Unit-capacity network: vertex v splits into in(v) = 2v and out(v) = 2v + 1
// joined by one arc; edge u -> v becomes out(u) -> in(v); out(a) feeds the
// terminal for each sink a.
class SplitNetwork {
 public:
  SplitNetwork(const WeightedDigraph& g, const SinkSet& a)
      : terminal_(2 * g.vertex_count() + 2), arcs_of_(static_cast<std::size_t>(terminal_) + 1) {
    for (int v = 1; v <= g.vertex_count(); ++v) add_arc(in(v), out(v));
    for (int u = 1; u <= g.vertex_count(); ++u) {
      if (a.contains(u)) {
        add_arc(out(u), terminal_);
        continue;
      }
      for (int v : g.out_neighbors(u))
        if (v != u) add_arc(out(u), in(v));
    }
  }

  bool augment_from(int source_vertex) {
    visited_.assign(arcs_of_.size(), false);
    return dfs(in(source_vertex));
  }

  // Follows saturated forward arcs from in(start) to the terminal.
  std::vector<int> trace(int start) const {
    std::vector<int> path{start};
    int node = out(start);
    while (true) {
      int next = -1;
      for (int id : arcs_of_[static_cast<std::size_t>(node)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(id)];
        if (arc.forward && arc.capacity == 0) {
          next = arc.to;
          break;
        }
      }
      if (next == terminal_ || next < 0) return path;
      path.push_back(next / 2);
      node = out(next / 2);
    }
  }

 private:
  struct Arc {
    int to;
    int capacity;
    bool forward;
  };

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void add_arc(int from, int to) {
    arcs_of_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1, true});
    arcs_of_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, false});
  }

  bool dfs(int node) {
    if (node == terminal_) return true;
    visited_[static_cast<std::size_t>(node)] = true;
    for (int id : arcs_of_[static_cast<std::size_t>(node)]) {
      Arc& arc = arcs_[static_cast<std::size_t>(id)];
      if (arc.capacity == 0 || visited_[static_cast<std::size_t>(arc.to)]) continue;
      if (dfs(arc.to)) {
        arc.capacity -= 1;
        arcs_[static_cast<std::size_t>(id ^ 1)].capacity += 1;
        return true;
      }
    }
    return false;
  }

  int terminal_;
  std::vector<std::vector<int>> arcs_of_;
  std::vector<Arc> arcs_;
  std::vector<bool> visited_;
};

void check_subset(const Subset& b, int n) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1 || b[i] > n) throw OutOfRange("vertex outside [1, " + std::to_string(n) + "]");
    if (i > 0 && b[i - 1] >= b[i]) throw InvalidInput("subset must be sorted and duplicate-free");
  }
}

}  // namespace

Linkage max_linkage(const WeightedDigraph& g, const SinkSet& a, const Subset& b) {
  a.check_within(g.vertex_count());
  check_subset(b, g.vertex_count());
  SplitNetwork net(g, a);
  std::vector<int> linked;
  for (int v : b)
    if (net.augment_from(v)) linked.push_back(v);
  // An augmentation never disconnects an earlier source, but it may reroute it.
  std::vector<std::vector<int>> paths;
  for (int v : linked) paths.push_back(net.trace(v));
  Linkage result;
  result.size = static_cast<int>(linked.size());
  result.witness = make_routing(std::move(paths));
  return result;
}

Matroid gammoid_matroid(const WeightedDigraph& g, const SinkSet& a) {
  a.check_within(g.vertex_count());
  const WeightedDigraph h = sinkify(g, a);
  std::vector<Subset> bases;
  for (auto& b : k_subsets(g.vertex_count(), a.size())) {
    if (max_linkage(h, a, b).size == a.size()) bases.push_back(std::move(b));
  }
  return Matroid(g.vertex_count(), std::move(bases));
}

WeightMap<Fp> sample_edge_weights(const WeightedDigraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  WeightMap<Fp> w;
  for (const auto& e : g.edges()) w.emplace(std::pair{e.from, e.to}, sample_nonzero_fp(rng));
  return w;
}

WeightMap<Rational> rational_edge_weights(const WeightedDigraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  WeightMap<Rational> w;
  for (const auto& e : g.edges()) {
    // Draw unconditionally so filled weights do not depend on which edges are explicit.
    Rational sampled = sample_small_rational(rng);
    w.emplace(std::pair{e.from, e.to}, e.weight ? *e.weight : std::move(sampled));
  }
  return w;
}

WeightMap<Rational> nonsingular_rational_edge_weights(const WeightedDigraph& g, std::uint64_t seed,
                                                      unsigned max_retries) {
  const bool seeded = std::any_of(g.edges().begin(), g.edges().end(),
                                  [](const Edge& e) { return !e.weight; });
  for (unsigned attempt = 0;; ++attempt) {
    WeightMap<Rational> w = rational_edge_weights(g, derive_seed(seed, attempt));
    Matrix<Rational> system = Matrix<Rational>::identity(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [edge, value] : w)
      system(static_cast<std::size_t>(edge.first - 1), static_cast<std::size_t>(edge.second - 1)) -= value;
    if (!det(system).is_zero()) return w;
    if (!seeded || attempt >= max_retries) throw SingularSystem("I - W is singular for these weights");
  }
}

WeightMap<Rational> explicit_edge_weights(const WeightedDigraph& g) {
  WeightMap<Rational> w;
  for (const auto& e : g.edges()) {
    if (!e.weight) {
      throw MissingWeight("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                          " has no weight");
    }
    w.emplace(std::pair{e.from, e.to}, *e.weight);
  }
  return w;
}

namespace {

template <Field F>
const F& weight_of(const WeightMap<F>& weights, int u, int v) {
  const auto it = weights.find({u, v});
  if (it == weights.end()) {
    throw MissingWeight("edge " + std::to_string(u) + "->" + std::to_string(v) + " has no weight");
  }
  return it->second;
}

}  // namespace

template <Field F>
Matrix<F> path_sum_matrix(const WeightedDigraph& g, const WeightMap<F>& weights) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix<F> system = Matrix<F>::identity(n);
  for (const auto& e : g.edges()) {
    system(static_cast<std::size_t>(e.from - 1), static_cast<std::size_t>(e.to - 1)) -=
        weight_of(weights, e.from, e.to);
  }
  try {
    return inverse(system);
  } catch (const Singular&) {
    throw SingularSystem("I - W is singular for these weights");
  }
}

template <Field F>
Matrix<F> gammoid_representation(const WeightedDigraph& g, const SinkSet& a,
                                 const WeightMap<F>& weights) {
  const WeightedDigraph h = sinkify(g, a);
  const Matrix<F> p = path_sum_matrix(h, weights);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix<F> y(a.vertices().size(), n);
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    const auto sink = static_cast<std::size_t>(a.vertices()[i] - 1);
    for (std::size_t j = 0; j < n; ++j) y(i, j) = p(j, sink);
  }
  return y;
}

SeededGammoidRepresentation gammoid_representation(const WeightedDigraph& g, const SinkSet& a,
                                                   std::uint64_t seed, unsigned max_retries) {
  const WeightedDigraph h = sinkify(g, a);
  for (unsigned attempt = 0;; ++attempt) {
    const std::uint64_t s = derive_seed(seed, attempt);
    WeightMap<Fp> weights = sample_edge_weights(h, s);
    try {
      Matrix<Fp> y = gammoid_representation(h, a, weights);
      return {std::move(y), std::move(weights), s, attempt + 1};
    } catch (const SingularSystem&) {
      if (attempt >= max_retries) throw;
    }
  }
}

namespace {

template <Field F>
class RoutingSearch {
 public:
  RoutingSearch(const WeightedDigraph& g, const SinkSet& a, const Subset& b,
                const WeightMap<F>& weights)
      : g_(g), a_(a), b_(b), weights_(weights),
        used_(static_cast<std::size_t>(g.vertex_count()) + 1, false) {
    for (int v : b_) used_[static_cast<std::size_t>(v)] = true;
  }

  std::vector<WeightedRouting<F>> run() {
    place(0, F::one());
    return std::move(found_);
  }

 private:
  // Route start b_[k]; its vertex is already reserved.
  void place(std::size_t k, const F& weight) {
    if (k == b_.size()) {
      found_.push_back({make_routing(current_), weight});
      return;
    }
    current_.push_back({b_[k]});
    extend(k, weight);
    current_.pop_back();
  }

  void extend(std::size_t k, const F& weight) {
    const int tip = current_.back().back();
    if (a_.contains(tip)) {
      place(k + 1, weight);
      return;
    }
    for (int v : g_.out_neighbors(tip)) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      current_.back().push_back(v);
      extend(k, weight * weight_of(weights_, tip, v));
      current_.back().pop_back();
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const WeightedDigraph& g_;
  const SinkSet& a_;
  const Subset& b_;
  const WeightMap<F>& weights_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> current_;
  std::vector<WeightedRouting<F>> found_;
};

}  // namespace

template <Field F>
std::vector<WeightedRouting<F>> enumerate_routings(const WeightedDigraph& g, const SinkSet& a,
                                                   const Subset& b, const WeightMap<F>& weights) {
  a.check_within(g.vertex_count());
  check_subset(b, g.vertex_count());
  if (b.size() != a.vertices().size()) throw DimensionMismatch("|B| must equal |A|");
  const WeightedDigraph h = sinkify(g, a);
  if (!h.is_acyclic()) throw CyclicGraph("routing enumeration requires an acyclic graph");
  return RoutingSearch<F>(h, a, b, weights).run();
}

template <Field F>
LgvReport<F> lgv_check(const WeightedDigraph& g, const SinkSet& a, const Subset& b,
                       const WeightMap<F>& weights) {
  if (b.size() != a.vertices().size()) throw DimensionMismatch("|B| must equal |A|");
  const auto routings = enumerate_routings(g, a, b, weights);
  const Matrix<F> y = gammoid_representation(g, a, weights);
  std::vector<std::size_t> columns;
  for (int v : b) columns.push_back(static_cast<std::size_t>(v - 1));

  LgvReport<F> report{det(y.select_columns(columns)), F::zero(), false, routings.size()};
  for (const auto& r : routings) {
    if (r.routing.sign > 0) {
      report.signed_sum += r.weight;
    } else {
      report.signed_sum -= r.weight;
    }
  }
  report.equal = report.determinant == report.signed_sum;
  return report;
}

#define COTRANS_INSTANTIATE(F)                                                                \
  template Matrix<F> path_sum_matrix(const WeightedDigraph&, const WeightMap<F>&);            \
  template Matrix<F> gammoid_representation(const WeightedDigraph&, const SinkSet&,           \
                                            const WeightMap<F>&);                             \
  template std::vector<WeightedRouting<F>> enumerate_routings(                                \
      const WeightedDigraph&, const SinkSet&, const Subset&, const WeightMap<F>&);            \
  template LgvReport<F> lgv_check(const WeightedDigraph&, const SinkSet&, const Subset&,      \
                                  const WeightMap<F>&);

COTRANS_INSTANTIATE(Fp)
COTRANS_INSTANTIATE(Rational)

#undef COTRANS_INSTANTIATE

}  // namespace cotrans
