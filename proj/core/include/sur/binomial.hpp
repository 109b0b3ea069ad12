#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace sur {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

// C(n, k) when it fits in 64 bits.
std::optional<std::uint64_t> binomial_u64(long long n, long long k);

BigInt ceil_div(const BigInt& num, const BigInt& den);

}  // namespace sur
