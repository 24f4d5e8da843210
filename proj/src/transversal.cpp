#include "cotrans/transversal.hpp"

#include <algorithm>

#include "cotrans/error.hpp"

namespace cotrans {

Presentation::Presentation(int ground_size, std::vector<Subset> sets)
    : n_(ground_size), sets_(std::move(sets)) {
  if (n_ < 0 || n_ > kMaxGroundSize) {
    throw InvalidInput("ground size " + std::to_string(n_) + " outside [0, " +
                       std::to_string(kMaxGroundSize) + "]");
  }
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidInput("set repeats an element");
    }
    if (!s.empty() && (s.front() < 1 || s.back() > n_)) {
      throw InvalidInput("set element outside [1, " + std::to_string(n_) + "]");
    }
  }
}

std::vector<int> Presentation::empty_sets() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < sets_.size(); ++i)
    if (sets_[i].empty()) out.push_back(static_cast<int>(i + 1));
  return out;
}

std::vector<int> Matching::left_of_right(int right_size) const {
  std::vector<int> out(static_cast<std::size_t>(right_size), 0);
  for (auto [left, right] : pairs) out.at(static_cast<std::size_t>(right - 1)) = left;
  return out;
}

BipartiteGraph presentation_to_bipartite(const Presentation& p) {
  BipartiteGraph g;
  g.left_size = p.ground_size();
  for (int i = 1; i <= p.set_count(); ++i) g.right_labels.push_back(i);
  g.adjacency = p.sets();
  return g;
}

Presentation bipartite_to_presentation(const BipartiteGraph& g) {
  return Presentation(g.left_size, g.adjacency);
}

namespace {

class Kuhn {
 public:
  Kuhn(const BipartiteGraph& g, const std::vector<bool>& allowed, int first_right)
      : g_(g), allowed_(allowed), first_right_(first_right),
        match_of_left_(static_cast<std::size_t>(g.left_size) + 1, 0) {}

  Kuhn(const BipartiteGraph& g, const Subset& allowed)
      : g_(g),
        allowed_(static_cast<std::size_t>(g.left_size) + 1, false),
        match_of_left_(static_cast<std::size_t>(g.left_size) + 1, 0) {
    for (int x : allowed) {
      if (x < 1 || x > g.left_size) throw OutOfRange("left vertex outside [1, n]");
      allowed_[static_cast<std::size_t>(x)] = true;
    }
  }

  Matching run() {
    for (int right = first_right_; right <= g_.right_size(); ++right) {
      visited_.assign(allowed_.size(), false);
      augment(right);
    }
    Matching m;
    for (int left = 1; left <= g_.left_size; ++left) {
      if (match_of_left_[static_cast<std::size_t>(left)] != 0) {
        m.pairs.emplace_back(left, match_of_left_[static_cast<std::size_t>(left)]);
      }
    }
    std::sort(m.pairs.begin(), m.pairs.end(),
              [](auto a, auto b) { return a.second < b.second; });
    return m;
  }

 private:
  bool augment(int right) {
    for (int left : g_.adjacency[static_cast<std::size_t>(right - 1)]) {
      const auto l = static_cast<std::size_t>(left);
      if (!allowed_[l] || visited_[l]) continue;
      visited_[l] = true;
      if (match_of_left_[l] == 0 || augment(match_of_left_[l])) {
        match_of_left_[l] = right;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<bool> allowed_;
  int first_right_ = 1;
  std::vector<bool> visited_;
  std::vector<int> match_of_left_;
};

Subset full_set(int n) {
  Subset s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  return s;
}

}  // namespace

// Fixes right vertices in order, each to its smallest neighbor that still
// extends to a maximum matching.
Matching max_matching(const BipartiteGraph& g, const Subset& restrict_left) {
  const int k = Kuhn(g, restrict_left).run().size();
  std::vector<bool> free(static_cast<std::size_t>(g.left_size) + 1, false);
  for (int x : restrict_left) free[static_cast<std::size_t>(x)] = true;
  Matching m;
  for (int right = 1; right <= g.right_size(); ++right) {
    for (int left : g.adjacency[static_cast<std::size_t>(right - 1)]) {
      const auto l = static_cast<std::size_t>(left);
      if (!free[l]) continue;
      free[l] = false;
      if (Kuhn(g, free, right + 1).run().size() == k - m.size() - 1) {
        m.pairs.emplace_back(left, right);
        break;
      }
      free[l] = true;
    }
  }
  return m;
}

Matching max_matching(const BipartiteGraph& g) { return max_matching(g, full_set(g.left_size)); }

Matroid transversal_matroid(const Presentation& p) {
  const BipartiteGraph g = presentation_to_bipartite(p);
  const int k = Kuhn(g, full_set(g.left_size)).run().size();
  std::vector<Subset> bases;
  for (auto& s : k_subsets(p.ground_size(), k)) {
    if (Kuhn(g, s).run().size() == k) bases.push_back(std::move(s));
  }
  return Matroid(p.ground_size(), std::move(bases));
}

void check_complete_matching(const Presentation& p, const Matching& m) {
  if (m.size() != p.set_count()) throw InvalidInput("matching does not cover every set");
  std::vector<bool> left_used(static_cast<std::size_t>(p.ground_size()) + 1, false);
  std::vector<bool> right_used(static_cast<std::size_t>(p.set_count()) + 1, false);
  for (auto [left, right] : m.pairs) {
    if (right < 1 || right > p.set_count() || left < 1 || left > p.ground_size()) {
      throw InvalidInput("matching pair out of range");
    }
    if (left_used[static_cast<std::size_t>(left)] || right_used[static_cast<std::size_t>(right)]) {
      throw InvalidInput("matching repeats a vertex");
    }
    left_used[static_cast<std::size_t>(left)] = right_used[static_cast<std::size_t>(right)] = true;
    if (!std::binary_search(p.set(right).begin(), p.set(right).end(), left)) {
      throw InvalidInput("matching pair is not an edge");
    }
  }
}

template <Field F>
TransversalRepresentation<F> transversal_representation(const Presentation& p,
                                                        const WeightMap<F>& weights,
                                                        const TransversalOptions& options) {
  const auto r = static_cast<std::size_t>(p.set_count());
  const auto n = static_cast<std::size_t>(p.ground_size());
  TransversalRepresentation<F> rep{Matrix<F>(r, n), {}, std::nullopt};

  std::vector<int> unit_column(r, 0);
  if (options.normalize) {
    Matching m = options.matching ? *options.matching : max_matching(presentation_to_bipartite(p));
    if (m.size() < p.set_count()) {
      throw NormalizationImpossible("no matching covers all " + std::to_string(r) + " sets");
    }
    check_complete_matching(p, m);
    unit_column = m.left_of_right(p.set_count());
    rep.normalization = std::move(m);
  }

  for (int i = 1; i <= p.set_count(); ++i) {
    const auto row = static_cast<std::size_t>(i - 1);
    for (int j : p.set(i)) {
      const auto col = static_cast<std::size_t>(j - 1);
      if (unit_column[row] == j) {
        rep.matrix(row, col) = F::one();
        continue;
      }
      const auto it = weights.find({i, j});
      if (it == weights.end()) {
        throw MissingWeight("no weight for entry (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
      }
      rep.matrix(row, col) = -it->second;
      rep.weights.emplace(it->first, it->second);
    }
  }
  return rep;
}

template TransversalRepresentation<Fp> transversal_representation(const Presentation&,
                                                                  const WeightMap<Fp>&,
                                                                  const TransversalOptions&);
template TransversalRepresentation<Rational> transversal_representation(
    const Presentation&, const WeightMap<Rational>&, const TransversalOptions&);

WeightMap<Fp> sample_entry_weights(const Presentation& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  WeightMap<Fp> w;
  for (int i = 1; i <= p.set_count(); ++i)
    for (int j : p.set(i)) w.emplace(std::pair{i, j}, sample_nonzero_fp(rng));
  return w;
}

WeightMap<Rational> sample_rational_entry_weights(const Presentation& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  WeightMap<Rational> w;
  for (int i = 1; i <= p.set_count(); ++i)
    for (int j : p.set(i)) w.emplace(std::pair{i, j}, sample_small_rational(rng));
  return w;
}

TransversalRepresentation<Fp> transversal_representation(const Presentation& p, std::uint64_t seed,
                                                         const TransversalOptions& options) {
  return transversal_representation(p, sample_entry_weights(p, seed), options);
}

}  // namespace cotrans
