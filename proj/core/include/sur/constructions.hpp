#pragma once

#include <cstddef>
#include <vector>

#include "sur/types.hpp"

namespace sur {

// {{1,2},{1,3},...,{1,n}}: n-1 pairs that represent every nontrivial
// bicoloring of [n].
SurFamily star(std::size_t n);

// For n = 2^p: the union over block sizes 2, 4, ..., n of the partitions of
// [n] into consecutive blocks. Size n-1.
SurFamily dyadic(std::size_t n);

// n ≡ 0 (mod 4): the n/2 windows {i, ..., i + n/2 - 1}, i = 1..n/2. Represents
// every balanced bicoloring.
SurFamily sliding_window(std::size_t n);

// c_i(B) = <Y_B, X_{A_i}> for the sliding windows A_i.
struct WindowProfile {
  std::vector<long long> values;

  bool all_even() const;
  bool steps_bounded() const;    // |c_i - c_{i+1}| ∈ {0, 2}
  bool endpoints_opposite() const;  // c_1 * c_{n/2} <= 0
  bool has_zero() const;
};

WindowProfile window_profile(std::size_t n, const Bicoloring& b);

// ceil(n/2) pairs covering [n]; represents every bicoloring with one +1.
SurFamily singleton_edge_cover(std::size_t n);

// Extends each (r-2)-set A by {x_1, x_j} for j = 2..n-r+2, where
// x_1 < x_2 < ... are the elements outside A. Duplicates across base sets
// are dropped; first occurrence order is kept.
SurFamily recursive_lift(const SurFamily& base, std::size_t n, std::size_t r);

}  // namespace sur
