#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sur/types.hpp"

namespace sur {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

// Visits every k-subset of {0..n-1} as a sorted index vector, in
// lexicographic order. Stops early when the visitor returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit);

// k-subsets of [n] as n-bit masks (n <= 64), lexicographic in the member lists.
std::vector<std::uint64_t> combination_masks(std::size_t n, std::size_t k,
                                             std::uint64_t cap = kDefaultEnumerationCap);

// All C(n,k) k-bicolorings, ordered lexicographically by B(+1).
BicoloringFamily enumerate_k_bicolorings(std::size_t n, std::size_t k,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// All 2^n - 2 nontrivial bicolorings, grouped by plus count 1..n-1.
BicoloringFamily enumerate_nontrivial_bicolorings(std::size_t n,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

// Even-sized subsets with size in [r_min, r_max], in lexicographic order of
// the member lists.
std::vector<IndexSet> enumerate_even_subsets(std::size_t n, std::size_t r_min, std::size_t r_max,
                                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace sur
