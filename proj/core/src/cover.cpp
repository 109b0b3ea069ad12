#include "sur/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <queue>
#include <string>

#include "sur/error.hpp"

namespace sur {

namespace {

bool valid_nkr(long long n, long long k, long long r) {
  return n >= 1 && k >= 0 && k <= n && r >= 2 && r % 2 == 0 && r <= n && r <= 2 * k &&
         k - r / 2 <= n - r;
}

// ln of a positive big integer without overflowing double.
double big_log(const BigInt& x) {
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double round_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

}  // namespace

CoverInstance CoverInstance::build(std::size_t n, std::size_t k, std::size_t r, std::uint64_t cap) {
  if (n > 64) throw Error(ErrorCode::kCapExceeded, "cover instances need n <= 64");
  if (!valid_nkr(static_cast<long long>(n), static_cast<long long>(k), static_cast<long long>(r))) {
    throw Error(ErrorCode::kInvalidArgument,
                "cover instance needs r even, 2 <= r <= min(2k, n), got (n,k,r) = (" +
                    std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")");
  }
  CoverInstance inst;
  inst.n_ = n;
  inst.k_ = k;
  inst.r_ = r;
  inst.points_ = combination_masks(n, k, cap);
  inst.sets_ = combination_masks(n, r, cap);
  return inst;
}

bool CoverInstance::covers(std::size_t set_index, std::size_t point_index) const noexcept {
  return 2 * static_cast<std::size_t>(std::popcount(sets_[set_index] & points_[point_index])) == r_;
}

BigInt cover_degree_a(long long n, long long k, long long r) {
  if (!valid_nkr(n, k, r)) return 0;
  return binomial(r, r / 2) * binomial(n - r, k - r / 2);
}

BigInt cover_degree_v(long long n, long long k, long long r) {
  if (!valid_nkr(n, k, r)) return 0;
  return binomial(k, r / 2) * binomial(n - k, r / 2);
}

bool double_counting_check(long long n, long long k, long long r) {
  return binomial(n, k) * cover_degree_v(n, k, r) == binomial(n, r) * cover_degree_a(n, k, r);
}

std::optional<BigInt> averaging_lower_bound(long long n, long long k, long long r) {
  const BigInt a = cover_degree_a(n, k, r);
  if (a == 0) return std::nullopt;
  return ceil_div(binomial(n, k), a);
}

long long nkr1_lower_bound(long long n, long long k, long long r) {
  if (r <= 0) throw Error(ErrorCode::kInvalidArgument, "r must be positive");
  const auto up = [r](long long x) { return (x + r - 1) / r; };
  return std::max(up(n - k), up(k));
}

std::optional<double> lovasz_stein_bound(long long n, long long k, long long r) {
  const BigInt v = cover_degree_v(n, k, r);
  if (v == 0) return std::nullopt;
  const BigInt a = cover_degree_a(n, k, r);
  const double ratio = Rational(binomial(n, r), v).convert_to<double>();
  return round_significant(ratio * (1.0 + big_log(a)), 6);
}

BoundsReport compute_bounds(long long n, long long k, long long r) {
  BoundsReport rep;
  rep.n = n;
  rep.k = k;
  rep.r = r;
  rep.a = cover_degree_a(n, k, r);
  rep.v = cover_degree_v(n, k, r);
  rep.lovasz_stein_upper = lovasz_stein_bound(n, k, r);
  rep.averaging_lower = averaging_lower_bound(n, k, r);
  rep.nkr1_lower = (r > 0) ? nkr1_lower_bound(n, k, r) : 0;
  if (rep.averaging_lower) {
    rep.combined_lower = std::max(*rep.averaging_lower, BigInt(rep.nkr1_lower));
  }
  return rep;
}

SurFamily greedy_cover(std::size_t n, std::size_t k, std::size_t r, std::uint64_t cap) {
  if (cover_degree_v(static_cast<long long>(n), static_cast<long long>(k),
                     static_cast<long long>(r)) == 0) {
    throw Error(ErrorCode::kInfeasible, "no " + std::to_string(r) + "-set represents a " +
                                            std::to_string(k) + "-bicoloring of [" +
                                            std::to_string(n) + "]");
  }
  const auto inst = CoverInstance::build(n, k, r, cap);
  const auto& points = inst.points();
  const auto& sets = inst.sets();
  const std::size_t half = r / 2;

  std::vector<std::uint32_t> uncovered(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) uncovered[i] = static_cast<std::uint32_t>(i);

  const auto gain = [&](std::size_t s) {
    std::size_t g = 0;
    for (auto p : uncovered) {
      g += static_cast<std::size_t>(std::popcount(sets[s] & points[p])) == half ? 1 : 0;
    }
    return g;
  };

  // Lazy greedy: gains only shrink, so a stale key is an upper bound. The
  // heap order (gain desc, index asc) reproduces the eager tie rule.
  struct Entry {
    std::size_t gain;
    std::size_t index;
    bool operator<(const Entry& o) const {
      return gain != o.gain ? gain < o.gain : index > o.index;
    }
  };
  std::priority_queue<Entry> heap;
  for (std::size_t s = 0; s < sets.size(); ++s) heap.push({gain(s), s});

  std::vector<IndexSet> chosen;
  while (!uncovered.empty()) {
    Entry top = heap.top();
    heap.pop();
    const std::size_t fresh = gain(top.index);
    if (!heap.empty() && Entry{fresh, top.index} < heap.top()) {
      heap.push({fresh, top.index});
      continue;
    }
    const std::uint64_t mask = sets[top.index];
    chosen.push_back(IndexSet::from_bits(Bits::from_word(n, mask)));
    std::erase_if(uncovered, [&](std::uint32_t p) {
      return static_cast<std::size_t>(std::popcount(mask & points[p])) == half;
    });
  }
  return SurFamily(n, std::move(chosen));
}

BigInt v_pair_formula(long long n, long long k, long long r, long long x) {
  if (r % 2 != 0 || r < 0) throw Error(ErrorCode::kInvalidArgument, "v_pair needs an even r");
  const long long half = r / 2;
  BigInt total = 0;
  for (long long j = 0; j <= std::min(x, half); ++j) {
    const long long i = half - j;
    if (i > k - x) continue;
    const BigInt side = binomial(k - x, i);
    total += binomial(x, j) * binomial(n - 2 * k + x, j) * side * side;
  }
  return total;
}

std::uint64_t v_pair_bruteforce(const Bicoloring& b, const Bicoloring& d, std::size_t r,
                                std::uint64_t cap) {
  if (b.n() != d.n()) throw Error(ErrorCode::kDimensionMismatch, "bicolorings differ in n");
  if (b == d) throw Error(ErrorCode::kInvalidArgument, "v_pair needs two distinct bicolorings");
  if (b.plus_count() != d.plus_count()) {
    throw Error(ErrorCode::kInvalidArgument, "v_pair needs equal plus counts");
  }
  if (b.n() > 64) throw Error(ErrorCode::kCapExceeded, "brute force needs n <= 64");
  const std::uint64_t pb = b.plus_bits().word0();
  const std::uint64_t pd = d.plus_bits().word0();
  std::uint64_t count = 0;
  for (auto mask : combination_masks(b.n(), r, cap)) {
    if (2 * static_cast<std::size_t>(std::popcount(mask & pb)) == r &&
        2 * static_cast<std::size_t>(std::popcount(mask & pd)) == r) {
      ++count;
    }
  }
  return count;
}

Rational v_pair_ratio(long long n, long long k) {
  if (k < 1 || 2 * k > n) throw Error(ErrorCode::kInvalidArgument, "v_pair ratio needs 1 <= k <= n/2");
  const long long r = 2 * k;
  return Rational(v_pair_formula(n, k, r, k - 1), cover_degree_v(n, k, r));
}

}  // namespace sur
