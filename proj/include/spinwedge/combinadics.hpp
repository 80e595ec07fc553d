#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Colexicographic ranking of k-subsets of {0..n-1}. The colex rank of
// {c_0 < ... < c_{k-1}} is sum_i C(c_i, i+1); it coincides with the position
// of the subset's bitmask among all weight-k masks sorted numerically.

namespace spinwedge {

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws CapacityError on
/// uint64 overflow.
std::uint64_t binomial(int n, int k);

/// Throws InputError unless `elements` is strictly increasing within [0, n).
std::uint64_t rank_subset(std::span<const int> elements, int n);
/// Throws InputError unless rank < C(n, k).
std::vector<int> unrank_subset(std::uint64_t rank, int n, int k);

std::uint64_t rank_mask(std::uint64_t mask);
std::uint64_t unrank_mask(std::uint64_t rank, int n, int k);

std::uint64_t subset_to_mask(std::span<const int> elements);
std::vector<int> mask_to_subset(std::uint64_t mask);

struct KSubset {
  std::vector<int> elements;
  std::uint64_t rank = 0;
};

/// All k-subsets in colex order.
std::vector<KSubset> all_subsets(int n, int k);

}  // namespace spinwedge
