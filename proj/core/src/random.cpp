#include "sur/random.hpp"

#include <algorithm>
#include <unordered_set>

namespace sur {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top multiple of bound keeps the draw unbiased.
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::vector<std::size_t> Rng::sample_subset(std::size_t n, std::size_t k) {
  // Floyd's algorithm: k draws, uniform over all k-subsets.
  std::vector<std::size_t> out;
  out.reserve(k);
  std::unordered_set<std::size_t> taken;
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::size_t>(below(j + 1));
    if (taken.insert(t).second) {
      out.push_back(t);
    } else {
      taken.insert(j);
      out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sur
