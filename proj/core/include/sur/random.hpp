#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace sur {

// Seeded stream with platform-independent derived draws. std::mt19937_64's
// output sequence is fixed by the standard; the std distributions are not,
// so the derivations below are hand-written.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform k-subset of {0..n-1}, sorted.
  std::vector<std::size_t> sample_subset(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sur
