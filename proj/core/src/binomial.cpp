#include "sur/binomial.hpp"

#include <limits>

namespace sur {

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::optional<std::uint64_t> binomial_u64(long long n, long long k) {
  const BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return b.convert_to<std::uint64_t>();
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (q * den != num) ++q;
  return q;
}

}  // namespace sur
