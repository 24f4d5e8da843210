#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cotrans {

// Sorted ascending subset of [n] = {1, ..., n}.
using Subset = std::vector<int>;

// Subset enumeration is exponential in n; larger ground sets are refused.
inline constexpr int kMaxGroundSize = 30;

// A matroid given by its explicit list of bases. Elements are 1-based.
// Construction canonicalizes (sorts each basis, sorts and dedupes the list)
// and enforces the structural invariants: non-empty, equicardinal, in range.
// The exchange axiom is checked separately by validate_basis_exchange.
class Matroid {
 public:
  Matroid(int ground_size, std::vector<Subset> bases);

  [[nodiscard]] int ground_size() const noexcept { return n_; }
  [[nodiscard]] int rank() const noexcept { return static_cast<int>(bases_.front().size()); }
  [[nodiscard]] const std::vector<Subset>& bases() const noexcept { return bases_; }
  [[nodiscard]] bool is_basis(const Subset& s) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_;
  std::vector<Subset> bases_;
};

struct ExchangeViolation {
  Subset first;
  Subset second;
  int element;

  friend bool operator==(const ExchangeViolation&, const ExchangeViolation&) = default;
};

// Empty optional means the axiom holds. Otherwise the first (B1, B2, e) in
// lexicographic scan order for which no f in B2 - B1 makes B1 - e + f a basis.
std::optional<ExchangeViolation> validate_basis_exchange(const Matroid& m);

Matroid dual(const Matroid& m);

// max |B intersect s| over all bases; throws OutOfRange for elements outside [n].
int rank_of(const Matroid& m, const Subset& s);

inline bool equal(const Matroid& a, const Matroid& b) { return a == b; }

// {"n": n, "rank": r, "bases": [[...], ...]} with no whitespace.
std::string to_json(const Matroid& m);

// Subset helpers shared by the enumerating modules.
std::uint64_t to_mask(const Subset& s);
Subset from_mask(std::uint64_t mask);
Subset complement(const Subset& s, int n);

// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

}  // namespace cotrans
