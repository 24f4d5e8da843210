#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cotrans/matrix.hpp"
#include "cotrans/matroid.hpp"
#include "cotrans/weights.hpp"

namespace cotrans {

// Set system (A_1, ..., A_r) over [n]. Each A_i is stored sorted; empty sets
// are allowed.
class Presentation {
 public:
  Presentation(int ground_size, std::vector<Subset> sets);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] int set_count() const noexcept { return static_cast<int>(sets_.size()); }
  [[nodiscard]] const std::vector<Subset>& sets() const noexcept { return sets_; }
  // 1-based index.
  [[nodiscard]] const Subset& set(int i) const { return sets_.at(static_cast<std::size_t>(i - 1)); }
  // 1-based indices of empty sets. A non-empty result rules out a full transversal.
  [[nodiscard]] std::vector<int> empty_sets() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  int n_;
  std::vector<Subset> sets_;
};

// Bipartite graph with left vertices [n] and r right vertices. Right vertex k
// (1-based position) carries `right_labels[k-1]` and is adjacent to
// `adjacency[k-1]`.
struct BipartiteGraph {
  int left_size = 0;
  std::vector<int> right_labels;
  std::vector<Subset> adjacency;

  [[nodiscard]] int right_size() const noexcept { return static_cast<int>(adjacency.size()); }
  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

// (left vertex, right position) pairs, sorted by right position.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(pairs.size()); }
  // Left vertex matched to each right position 1..r, 0 if unmatched.
  [[nodiscard]] std::vector<int> left_of_right(int right_size) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

BipartiteGraph presentation_to_bipartite(const Presentation& p);
Presentation bipartite_to_presentation(const BipartiteGraph& g);

// The lexicographically first maximum matching between `restrict_left` and
// all right vertices: right vertex 1 takes the smallest left vertex it can
// while a maximum matching remains possible, then right vertex 2, and so on.
Matching max_matching(const BipartiteGraph& g, const Subset& restrict_left);
Matching max_matching(const BipartiteGraph& g);

// Bases are the maximum partial transversals: all k-subsets matchable in full,
// where k is the size of a maximum matching of the whole graph.
Matroid transversal_matroid(const Presentation& p);

// Throws InvalidInput unless `m` is a matching of `p` covering every set.
void check_complete_matching(const Presentation& p, const Matching& m);

struct TransversalOptions {
  bool normalize = false;
  // Complete matching fixing the unit entries; defaults to max_matching(H).
  std::optional<Matching> matching;
};

template <Field F>
struct TransversalRepresentation {
  Matrix<F> matrix;
  WeightMap<F> weights;
  std::optional<Matching> normalization;
};

// X(i, j) = -alpha(i, j) for j in A_i, zero elsewhere. When normalizing, the
// entries X(i, j_i) on the chosen complete matching are 1 and need no weight.
// Throws MissingWeight for any other entry absent from `weights`.
template <Field F>
TransversalRepresentation<F> transversal_representation(const Presentation& p,
                                                        const WeightMap<F>& weights,
                                                        const TransversalOptions& options = {});

// One uniform nonzero F_p weight per (i, j) with j in A_i.
WeightMap<Fp> sample_entry_weights(const Presentation& p, std::uint64_t seed);
// Small positive rational weights, same keys.
WeightMap<Rational> sample_rational_entry_weights(const Presentation& p, std::uint64_t seed);

TransversalRepresentation<Fp> transversal_representation(const Presentation& p, std::uint64_t seed,
                                                         const TransversalOptions& options = {});

}  // namespace cotrans
