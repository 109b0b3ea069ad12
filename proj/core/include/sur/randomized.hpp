#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sur/types.hpp"

namespace sur {

// e * sqrt(r) + d * r / n
double bias_tolerance(std::size_t n, std::size_t r, std::size_t d);

struct BiasParams {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t d = 0;
  std::size_t t = 0;           // ceil(ln |family|), at least 1
  double delta = 0.0;          // bias_tolerance(n, r, d)
  long long delta_floor = 0;   // inner products are integers
  std::size_t size_min = 0;    // r - ceil(r/2)
  std::size_t size_max = 0;    // r + ceil(r/2)
  double inclusion_probability = 0.0;  // r / n
};

BiasParams make_bias_params(std::size_t n, std::size_t r, std::size_t d, std::size_t family_size);

struct SampleTrace {
  std::uint64_t seed = 0;
  std::size_t rounds_drawn = 0;   // candidate subsets drawn
  std::size_t kept = 0;           // candidates with size in the window
  std::size_t groups_tested = 0;
  std::optional<std::size_t> winning_group;

  friend bool operator==(const SampleTrace&, const SampleTrace&) = default;
};

struct BiasedOptions {
  // Candidates drawn per unit of t.
  std::size_t draw_factor = 100;
};

struct BiasedResult {
  SurFamily family;
  Certificate certificate;
  SampleTrace trace;
  BiasParams params;
};

// Draws draw_factor * t subsets (each element kept with probability r/n),
// keeps the ones whose size lies in [r - ceil(r/2), r + ceil(r/2)], splits
// them into consecutive groups of t and returns the first group in which
// every bicoloring has a set with |<X_A,Y_B>| <= floor(delta).
//
// Requires r >= 8, r <= n, |family| >= 2 and |B(+1)| - |B(-1)| within ±d
// for every B. Throws kPoolShortfall or kNoGroupFound on sampling failure.
BiasedResult biased_sur(const BicoloringFamily& family, std::size_t r, std::size_t d,
                        std::uint64_t seed, const BiasedOptions& options = {});

// ceil(sqrt(pi r) / (2^r alpha^{r/2} (1-alpha)^{r/2}) * ln m), at least 1.
std::size_t sampled_draw_count(std::size_t r, double alpha, std::size_t family_size);

struct SampledResult {
  SurFamily family;
  std::size_t draws = 0;     // t
  std::size_t attempts = 0;  // 1 + failed restarts
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultMaxRestarts = 20;

// Draws t uniform r-subsets and keeps them if they form an exact SUR,
// otherwise restarts, at most max_restarts times after the first attempt.
// Requires r even, every plus count in [alpha n, (1-alpha) n],
// alpha in (0, 1/2]. Throws kNotFound when all attempts fail.
SampledResult sampled_exact_sur(const BicoloringFamily& family, std::size_t r, double alpha,
                                std::uint64_t seed,
                                std::size_t max_restarts = kDefaultMaxRestarts);

}  // namespace sur
