#include "sur/randomized.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "sur/error.hpp"
#include "sur/random.hpp"
#include "sur/verify.hpp"

namespace sur {

namespace {

std::size_t ceil_log(std::size_t m) {
  const double t = std::ceil(std::log(static_cast<double>(m)));
  return t < 1.0 ? 1 : static_cast<std::size_t>(t);
}

// Whether every bicoloring has a set with |<X_A, Y_B>| <= delta.
bool group_covers(const std::vector<IndexSet>& group, const BicoloringFamily& family,
                  long long delta) {
  for (const auto& b : family.items) {
    bool ok = false;
    for (const auto& a : group) {
      if (std::llabs(inner_product(a, b)) <= delta) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

double bias_tolerance(std::size_t n, std::size_t r, std::size_t d) {
  if (n == 0 || r == 0 || r > n) throw Error(ErrorCode::kInvalidArgument, "bias tolerance needs 1 <= r <= n");
  return std::numbers::e * std::sqrt(static_cast<double>(r)) +
         static_cast<double>(d) * static_cast<double>(r) / static_cast<double>(n);
}

BiasParams make_bias_params(std::size_t n, std::size_t r, std::size_t d, std::size_t family_size) {
  if (r < 8) throw Error(ErrorCode::kInvalidArgument, "biased sampling needs r >= 8");
  if (r > n) throw Error(ErrorCode::kInvalidArgument, "biased sampling needs r <= n");
  if (family_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "biased sampling needs at least two bicolorings");
  }
  BiasParams p;
  p.n = n;
  p.r = r;
  p.d = d;
  p.t = ceil_log(family_size);
  p.delta = bias_tolerance(n, r, d);
  p.delta_floor = static_cast<long long>(std::floor(p.delta));
  const std::size_t spread = (r + 1) / 2;
  p.size_min = r - spread;
  p.size_max = r + spread;
  p.inclusion_probability = static_cast<double>(r) / static_cast<double>(n);
  return p;
}

BiasedResult biased_sur(const BicoloringFamily& family, std::size_t r, std::size_t d,
                        std::uint64_t seed, const BiasedOptions& options) {
  const BiasParams params = make_bias_params(family.n, r, d, family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const long long imb = family.items[i].imbalance();
    if (std::llabs(imb) > static_cast<long long>(d)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bicoloring #" + std::to_string(i + 1) + " has imbalance " +
                      std::to_string(imb) + ", outside the budget d = " + std::to_string(d));
    }
  }
  if (options.draw_factor == 0) throw Error(ErrorCode::kInvalidArgument, "draw factor must be positive");

  Rng rng(seed);
  SampleTrace trace;
  trace.seed = seed;
  trace.rounds_drawn = options.draw_factor * params.t;

  std::vector<IndexSet> kept;
  for (std::size_t draw = 0; draw < trace.rounds_drawn; ++draw) {
    Bits bits(family.n);
    for (std::size_t i = 0; i < family.n; ++i) {
      if (rng.bernoulli(params.inclusion_probability)) bits.set(i);
    }
    const std::size_t size = bits.count();
    if (size >= params.size_min && size <= params.size_max && size > 0) {
      kept.push_back(IndexSet::from_bits(std::move(bits)));
    }
  }
  trace.kept = kept.size();
  if (kept.size() < params.t) {
    throw Error(ErrorCode::kPoolShortfall, "only " + std::to_string(kept.size()) +
                                               " candidates fell in the size window, need t = " +
                                               std::to_string(params.t));
  }

  const std::size_t groups = kept.size() / params.t;
  for (std::size_t g = 0; g < groups; ++g) {
    ++trace.groups_tested;
    std::vector<IndexSet> group(kept.begin() + static_cast<std::ptrdiff_t>(g * params.t),
                                kept.begin() + static_cast<std::ptrdiff_t>((g + 1) * params.t));
    if (group_covers(group, family, params.delta_floor)) {
      trace.winning_group = g;
      SurFamily result(family.n, std::move(group));
      Certificate cert = verify_sur(result, family, params.delta_floor);
      return {std::move(result), std::move(cert), trace, params};
    }
  }
  throw Error(ErrorCode::kNoGroupFound,
              "none of the " + std::to_string(groups) + " groups of " + std::to_string(params.t) +
                  " sets is a biased SUR (seed " + std::to_string(seed) + "); retry with a new seed");
}

std::size_t sampled_draw_count(std::size_t r, double alpha, std::size_t family_size) {
  if (r == 0 || r % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "r must be even and positive");
  if (!(alpha > 0.0 && alpha <= 0.5)) throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1/2]");
  if (family_size == 0) throw Error(ErrorCode::kInvalidArgument, "family is empty");
  const double rd = static_cast<double>(r);
  const double denom = std::pow(2.0, rd) * std::pow(alpha, rd / 2) * std::pow(1.0 - alpha, rd / 2);
  const double t = std::ceil(std::sqrt(std::numbers::pi * rd) / denom *
                             std::log(static_cast<double>(family_size)));
  return t < 1.0 ? 1 : static_cast<std::size_t>(t);
}

SampledResult sampled_exact_sur(const BicoloringFamily& family, std::size_t r, double alpha,
                                std::uint64_t seed, std::size_t max_restarts) {
  if (r % 2 != 0 || r == 0) throw Error(ErrorCode::kInvalidArgument, "r must be even and positive");
  if (r > family.n) throw Error(ErrorCode::kInvalidArgument, "r must not exceed n");
  const std::size_t t = sampled_draw_count(r, alpha, family.size());
  const double lo = alpha * static_cast<double>(family.n);
  const double hi = (1.0 - alpha) * static_cast<double>(family.n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto k = static_cast<double>(family.items[i].plus_count());
    if (k < lo || k > hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bicoloring #" + std::to_string(i + 1) + " has " +
                      std::to_string(family.items[i].plus_count()) +
                      " points colored +1, outside [alpha n, (1 - alpha) n]");
    }
  }

  Rng rng(seed);
  for (std::size_t attempt = 0; attempt <= max_restarts; ++attempt) {
    std::vector<IndexSet> sets;
    sets.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
      Bits bits(family.n);
      for (auto p : rng.sample_subset(family.n, r)) bits.set(p);
      sets.push_back(IndexSet::from_bits(std::move(bits)));
    }
    SurFamily candidate(family.n, std::move(sets));
    if (verify_sur(candidate, family, 0).all_covered()) {
      return {std::move(candidate), t, attempt + 1, seed};
    }
  }
  throw Error(ErrorCode::kNotFound, "no exact SUR among " + std::to_string(max_restarts + 1) +
                                        " attempts of " + std::to_string(t) +
                                        " random sets (seed " + std::to_string(seed) + ")");
}

}  // namespace sur
