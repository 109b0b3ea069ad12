#include "sur/enumerate.hpp"

#include <algorithm>
#include <string>

#include "sur/binomial.hpp"
#include "sur/error.hpp"

namespace sur {

namespace {

void check_cap(std::size_t n, std::size_t k, std::uint64_t cap) {
  auto count = binomial_u64(static_cast<long long>(n), static_cast<long long>(k));
  if (!count || *count > cap) {
    throw Error(ErrorCode::kCapExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                             ") exceeds the enumeration cap of " +
                                             std::to_string(cap));
  }
}

std::uint64_t to_mask(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (auto i : idx) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    // Advance the rightmost index that still has room.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::uint64_t> combination_masks(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (n > 64) throw Error(ErrorCode::kCapExceeded, "mask enumeration needs n <= 64");
  check_cap(n, k, cap);
  std::vector<std::uint64_t> out;
  for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
    out.push_back(to_mask(idx));
    return true;
  });
  return out;
}

BicoloringFamily enumerate_k_bicolorings(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (k > n) throw Error(ErrorCode::kInvalidArgument, "k must lie in [0, n]");
  check_cap(n, k, cap);
  std::vector<Bicoloring> items;
  for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
    Bits plus(n);
    for (auto i : idx) plus.set(i);
    items.push_back(Bicoloring::from_plus_bits(std::move(plus)));
    return true;
  });
  return BicoloringFamily(n, std::move(items));
}

BicoloringFamily enumerate_nontrivial_bicolorings(std::size_t n, std::uint64_t cap) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "nontrivial bicolorings need n >= 2");
  if (n >= 63 || (std::uint64_t{1} << n) - 2 > cap) {
    throw Error(ErrorCode::kCapExceeded, "2^" + std::to_string(n) +
                                             " - 2 exceeds the enumeration cap of " +
                                             std::to_string(cap));
  }
  std::vector<Bicoloring> items;
  for (std::size_t k = 1; k < n; ++k) {
    auto part = enumerate_k_bicolorings(n, k, cap);
    for (auto& b : part.items) items.push_back(std::move(b));
  }
  return BicoloringFamily(n, std::move(items));
}

std::vector<IndexSet> enumerate_even_subsets(std::size_t n, std::size_t r_min, std::size_t r_max,
                                             std::uint64_t cap) {
  if (r_min < 2 || r_min > r_max || r_max > n || r_min % 2 != 0 || r_max % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "even subset sizes need 2 <= r_min <= r_max <= n, both even");
  }
  BigInt total = 0;
  for (std::size_t r = r_min; r <= r_max; r += 2) {
    total += binomial(static_cast<long long>(n), static_cast<long long>(r));
  }
  if (total > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "even subsets of [" + std::to_string(n) + "] exceed the enumeration cap of " +
                    std::to_string(cap));
  }
  std::vector<IndexSet> out;
  for (std::size_t r = r_min; r <= r_max; r += 2) {
    for_each_combination(n, r, [&](const std::vector<std::size_t>& idx) {
      std::vector<int> members;
      members.reserve(idx.size());
      for (auto i : idx) members.push_back(static_cast<int>(i) + 1);
      out.push_back(IndexSet::from_members(n, std::move(members)));
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sur
