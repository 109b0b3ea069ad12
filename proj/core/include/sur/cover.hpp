#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sur/binomial.hpp"
#include "sur/enumerate.hpp"
#include "sur/types.hpp"

namespace sur {

// Incidence structure between the k-bicolorings of [n] (points) and the
// r-subsets of [n] (sets): set A covers point B iff <X_A, Y_B> = 0.
// Both sides are n-bit masks, so n <= 64.
class CoverInstance {
 public:
  static CoverInstance build(std::size_t n, std::size_t k, std::size_t r,
                             std::uint64_t cap = kDefaultEnumerationCap);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t r() const noexcept { return r_; }
  // B(+1) masks in lexicographic order.
  const std::vector<std::uint64_t>& points() const noexcept { return points_; }
  // r-set masks in lexicographic order.
  const std::vector<std::uint64_t>& sets() const noexcept { return sets_; }

  bool covers(std::size_t set_index, std::size_t point_index) const noexcept;

 private:
  std::size_t n_ = 0, k_ = 0, r_ = 0;
  std::vector<std::uint64_t> points_;
  std::vector<std::uint64_t> sets_;
};

// Number of k-bicolorings represented by one r-set: C(r, r/2) C(n-r, k-r/2).
// Zero when r is odd, r > n or r > 2k.
BigInt cover_degree_a(long long n, long long k, long long r);

// Number of r-sets representing one k-bicoloring: C(k, r/2) C(n-k, r/2).
BigInt cover_degree_v(long long n, long long k, long long r);

// C(n,k) v = C(n,r) a.
bool double_counting_check(long long n, long long k, long long r);

// ceil(C(n,k) / a); nullopt (infeasible) when a = 0.
std::optional<BigInt> averaging_lower_bound(long long n, long long k, long long r);

// max(ceil((n-k)/r), ceil(k/r)).
long long nkr1_lower_bound(long long n, long long k, long long r);

// (C(n,r) / v)(1 + ln a), rounded to 6 significant digits; nullopt when v = 0.
//
// The closed form commonly quoted replaces ln C(r, r/2) by 0.7r; this
// reports the unsimplified value, which is never larger.
std::optional<double> lovasz_stein_bound(long long n, long long k, long long r);

struct BoundsReport {
  long long n = 0, k = 0, r = 0;
  BigInt a;
  BigInt v;
  std::optional<double> lovasz_stein_upper;
  std::optional<BigInt> averaging_lower;
  long long nkr1_lower = 0;
  // max(averaging_lower, nkr1_lower); nullopt when infeasible.
  std::optional<BigInt> combined_lower;

  bool feasible() const noexcept { return lovasz_stein_upper.has_value(); }
};

BoundsReport compute_bounds(long long n, long long k, long long r);

// Greedy set cover over the CoverInstance: each round takes the r-set that
// represents the most still-unrepresented k-bicolorings, ties to the
// lexicographically smallest set. Throws kInfeasible when v = 0.
SurFamily greedy_cover(std::size_t n, std::size_t k, std::size_t r,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Number of r-sets representing two k-bicolorings whose +1 sides share x
// points:
//   sum_{i+j=r/2} C(x,j) C(n-2k+x, j) C(k-x, i)^2
BigInt v_pair_formula(long long n, long long k, long long r, long long x);

// Direct count of r-sets A with <X_A,Y_B> = <X_A,Y_D> = 0. B and D must
// differ and share n and plus count.
std::uint64_t v_pair_bruteforce(const Bicoloring& b, const Bicoloring& d, std::size_t r,
                                std::uint64_t cap = kDefaultEnumerationCap);

// v_pair / v for r = 2k as an exact rational (requires 2k <= n).
Rational v_pair_ratio(long long n, long long k);

}  // namespace sur
