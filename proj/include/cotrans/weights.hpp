#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "cotrans/random.hpp"
#include "cotrans/scalar.hpp"

namespace cotrans {

// Generic parameters keyed by an ordered index pair: (row i, column j) for
// the transversal matrix, (u, v) for the edge u -> v of a digraph. The bridge
// between the two identifies row i with the i-th non-sink vertex.
template <Field F>
using WeightMap = std::map<std::pair<int, int>, F>;

// Uniform over [1, p - 1]; never zero, so present entries never vanish.
inline Fp sample_nonzero_fp(SplitMix64& rng) {
  return Fp(rng.uniform(1, Fp::kModulus - 1));
}

// Small positive rational k/m with k, m in [1, 9]; keeps exact arithmetic cheap.
inline Rational sample_small_rational(SplitMix64& rng) {
  const auto num = static_cast<long>(rng.uniform(1, 9));
  const auto den = static_cast<long>(rng.uniform(1, 9));
  return Rational(mpz_class(num), mpz_class(den));
}

}  // namespace cotrans
