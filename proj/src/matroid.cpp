#include "cotrans/matroid.hpp"

#include <algorithm>
#include <bit>
#include "json.hpp"

#include "cotrans/error.hpp"

namespace cotrans {

Matroid::Matroid(int ground_size, std::vector<Subset> bases) : n_(ground_size), bases_(std::move(bases)) {
  if (n_ < 0 || n_ > kMaxGroundSize) {
    throw StructuralError("ground size " + std::to_string(n_) + " outside [0, " +
                          std::to_string(kMaxGroundSize) + "]");
  }
  if (bases_.empty()) throw StructuralError("matroid needs at least one basis");
  for (auto& b : bases_) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw StructuralError("basis repeats an element");
    }
    if (!b.empty() && (b.front() < 1 || b.back() > n_)) {
      throw StructuralError("basis element outside [1, " + std::to_string(n_) + "]");
    }
    if (b.size() != bases_.front().size()) throw StructuralError("bases are not equicardinal");
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool Matroid::is_basis(const Subset& s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

std::optional<ExchangeViolation> validate_basis_exchange(const Matroid& m) {
  std::vector<std::uint64_t> masks;
  masks.reserve(m.bases().size());
  for (const auto& b : m.bases()) masks.push_back(to_mask(b));
  std::vector<std::uint64_t> sorted_masks = masks;
  std::sort(sorted_masks.begin(), sorted_masks.end());
  auto is_basis = [&](std::uint64_t mask) {
    return std::binary_search(sorted_masks.begin(), sorted_masks.end(), mask);
  };

  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const std::uint64_t only_first = masks[i] & ~masks[j];
      const std::uint64_t only_second = masks[j] & ~masks[i];
      for (std::uint64_t rest = only_first; rest != 0; rest &= rest - 1) {
        const std::uint64_t e = rest & (~rest + 1);
        bool exchanged = false;
        for (std::uint64_t cand = only_second; cand != 0 && !exchanged; cand &= cand - 1) {
          const std::uint64_t f = cand & (~cand + 1);
          exchanged = is_basis((masks[i] & ~e) | f);
        }
        if (!exchanged) {
          return ExchangeViolation{m.bases()[i], m.bases()[j], std::countr_zero(e)};
        }
      }
    }
  }
  return std::nullopt;
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (const auto& b : m.bases()) bases.push_back(complement(b, m.ground_size()));
  return Matroid(m.ground_size(), std::move(bases));
}

int rank_of(const Matroid& m, const Subset& s) {
  for (int x : s) {
    if (x < 1 || x > m.ground_size()) {
      throw OutOfRange("element " + std::to_string(x) + " outside [1, " +
                       std::to_string(m.ground_size()) + "]");
    }
  }
  const std::uint64_t target = to_mask(s);
  int best = 0;
  for (const auto& b : m.bases()) best = std::max(best, std::popcount(to_mask(b) & target));
  return best;
}

std::string to_json(const Matroid& m) {
  nlohmann::ordered_json j;
  j["n"] = m.ground_size();
  j["rank"] = m.rank();
  j["bases"] = m.bases();
  return j.dump();
}

// Bit k stands for element k; bit 0 is unused.
std::uint64_t to_mask(const Subset& s) {
  std::uint64_t mask = 0;
  for (int x : s) mask |= std::uint64_t{1} << x;
  return mask;
}

Subset from_mask(std::uint64_t mask) {
  Subset s;
  for (; mask != 0; mask &= mask - 1) s.push_back(std::countr_zero(mask));
  return s;
}

Subset complement(const Subset& s, int n) {
  Subset out;
  std::size_t k = 0;
  for (int x = 1; x <= n; ++x) {
    if (k < s.size() && s[k] == x) {
      ++k;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[i] = i + 1;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace cotrans
