#include "spinwedge/combinadics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "spinwedge/errors.hpp"

namespace spinwedge {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw CapacityError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                          ") overflows 64 bits");
    }
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t rank_subset(std::span<const int> elements, int n) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int c = elements[i];
    if (c < 0 || c >= n) throw InputError("subset element " + std::to_string(c) + " out of range");
    if (i > 0 && elements[i - 1] >= c) throw InputError("subset elements must be strictly increasing");
    rank += binomial(c, static_cast<int>(i) + 1);
  }
  return rank;
}

std::vector<int> unrank_subset(std::uint64_t rank, int n, int k) {
  if (k < 0 || k > n) throw InputError("k out of range");
  if (rank >= binomial(n, k)) {
    throw InputError("rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) +
                     "," + std::to_string(k) + ")");
  }
  std::vector<int> elements(static_cast<std::size_t>(k));
  int c = n - 1;
  for (int i = k; i >= 1; --i) {
    // largest c with C(c, i) <= rank
    while (binomial(c, i) > rank) --c;
    elements[i - 1] = c;
    rank -= binomial(c, i);
    --c;
  }
  return elements;
}

std::uint64_t rank_mask(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask != 0) {
    const int c = std::countr_zero(mask);
    rank += binomial(c, i++);
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t unrank_mask(std::uint64_t rank, int n, int k) {
  return subset_to_mask(unrank_subset(rank, n, k));
}

std::uint64_t subset_to_mask(std::span<const int> elements) {
  std::uint64_t mask = 0;
  for (int c : elements) {
    if (c < 0 || c >= 64) throw InputError("bitmask subsets support vertices 0..63");
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

std::vector<int> mask_to_subset(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::vector<KSubset> all_subsets(int n, int k) {
  const std::uint64_t count = binomial(n, k);
  std::vector<KSubset> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(KSubset{unrank_subset(r, n, k), r});
  return out;
}

}  // namespace spinwedge
