#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sur/cover.hpp"
#include "sur/enumerate.hpp"
#include "sur/types.hpp"

namespace sur {

struct SearchConfig {
  enum class PoolKind { kAllEven, kFixedR };

  PoolKind pool = PoolKind::kAllEven;
  std::size_t r_min = 2;  // kAllEven; r_max = 0 means n
  std::size_t r_max = 0;
  std::size_t r = 2;      // kFixedR
  std::uint64_t node_budget = 100'000'000;
  double time_budget_seconds = 300.0;
  std::uint64_t cap = kDefaultEnumerationCap;

  static SearchConfig all_even(std::size_t r_min = 2, std::size_t r_max = 0) {
    SearchConfig c;
    c.pool = PoolKind::kAllEven;
    c.r_min = r_min;
    c.r_max = r_max;
    return c;
  }
  static SearchConfig fixed_r(std::size_t r) {
    SearchConfig c;
    c.pool = PoolKind::kFixedR;
    c.r = r;
    return c;
  }

  std::string describe() const;
};

enum class SearchStatus { kProvedOptimal, kBudgetExhausted };

struct OptimalResult {
  SurFamily family;  // best found; canonical (sorted) order
  std::size_t size = 0;
  SearchStatus status = SearchStatus::kProvedOptimal;
  std::size_t lower_bound = 0;  // equals size when proved optimal
  std::uint64_t nodes = 0;
  std::size_t points = 0;       // universe size after the flip quotient
  std::size_t candidates = 0;   // pool size after filtering
  bool flip_quotient = false;

  bool proved_optimal() const noexcept { return status == SearchStatus::kProvedOptimal; }
};

// Minimum-cardinality subfamily of the candidate pool representing every
// bicoloring, by depth-first branch and bound. n <= 64.
// Throws kInfeasible when some bicoloring has no representative in the pool.
OptimalResult optimal_sur(const BicoloringFamily& family, const SearchConfig& config);

// Which bicolorings a table row uses.
struct KSpec {
  enum class Kind { kFixed, kAllNontrivial, kHalf };
  Kind kind = Kind::kFixed;
  std::size_t k = 0;
};

// Which representative sizes a table row allows.
struct RSpec {
  enum class Kind { kFixed, kAllEven };
  Kind kind = Kind::kFixed;
  std::size_t r = 0;
};

struct TableCell {
  std::size_t n = 0;
  std::optional<std::size_t> k;  // nullopt: all nontrivial bicolorings
  std::optional<std::size_t> r;  // nullopt: all even sizes
  std::optional<OptimalResult> result;
  std::optional<std::string> error;
  std::optional<BoundsReport> bounds;  // fixed k and r only
  // Proved value inside [combined_lower, ceil(lovasz_stein_upper)]; nullopt
  // when there is nothing to compare.
  std::optional<bool> within_bounds;
};

std::vector<TableCell> gamma_table(std::size_t n_min, std::size_t n_max, const KSpec& k_spec,
                                   const RSpec& r_spec, const SearchConfig& budgets);

}  // namespace sur
