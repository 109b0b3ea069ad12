#include "sur/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>
#include <string>

#include "sur/error.hpp"

namespace sur {

namespace {

// Lexicographic order of the member lists of two n-bit masks.
bool mask_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const int p = std::countr_zero(diff);
  const std::uint64_t holder = (a >> p) & 1U ? a : b;
  const std::uint64_t other = holder == a ? b : a;
  const std::uint64_t above = p == 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
  const bool holder_first = (other & above) != 0;
  return holder_first == (holder == a);
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

using Words = std::vector<std::uint64_t>;

std::size_t count_and(const Words& a, const Words& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t count(const Words& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

class Search {
 public:
  Search(std::vector<Words> cover, std::vector<std::vector<std::size_t>> coverers,
         std::size_t points, const SearchConfig& config)
      : cover_(std::move(cover)),
        coverers_(std::move(coverers)),
        points_(points),
        words_((points + 63) / 64),
        node_budget_(config.node_budget),
        time_budget_(config.time_budget_seconds),
        forbidden_(cover_.size(), false),
        start_(std::chrono::steady_clock::now()) {}

  void set_incumbent(std::vector<std::size_t> chosen) { best_ = std::move(chosen); }

  // Returns false when a budget ran out before the tree was exhausted.
  bool run() {
    Words all(words_, ~std::uint64_t{0});
    if (points_ % 64 != 0) all.back() = (std::uint64_t{1} << (points_ % 64)) - 1;
    root_bound_ = bound_for(all);
    std::vector<std::size_t> chosen;
    dfs(all, chosen);
    return !aborted_;
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t root_bound() const { return root_bound_; }

 private:
  // ceil(|uncovered| / max coverage) over allowed candidates; SIZE_MAX when
  // nothing allowed covers anything.
  std::size_t bound_for(const Words& uncovered) const {
    const std::size_t left = count(uncovered);
    if (left == 0) return 0;
    std::size_t best = 0;
    for (std::size_t c = 0; c < cover_.size(); ++c) {
      if (!forbidden_[c]) best = std::max(best, count_and(cover_[c], uncovered));
    }
    if (best == 0) return SIZE_MAX;
    return (left + best - 1) / best;
  }

  bool out_of_budget() {
    if (nodes_ >= node_budget_) return true;
    if ((nodes_ & 255) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > time_budget_) return true;
    }
    return false;
  }

  void dfs(const Words& uncovered, std::vector<std::size_t>& chosen) {
    if (aborted_) return;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    ++nodes_;

    bool done = true;
    for (auto w : uncovered) done = done && w == 0;
    if (done) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::size_t lb = bound_for(uncovered);
    if (lb == SIZE_MAX || chosen.size() + lb >= best_.size()) return;

    // Most constrained uncovered point.
    std::size_t pick = SIZE_MAX;
    std::size_t pick_count = SIZE_MAX;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = uncovered[w];
      while (bits != 0) {
        const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::size_t c = 0;
        for (auto cand : coverers_[p]) c += forbidden_[cand] ? 0 : 1;
        if (c < pick_count) {
          pick_count = c;
          pick = p;
        }
      }
    }
    if (pick_count == 0) return;

    // Branch i takes the i-th allowed coverer and forbids the earlier ones.
    std::vector<std::size_t> newly_forbidden;
    Words next(words_);
    for (auto cand : coverers_[pick]) {
      if (forbidden_[cand]) continue;
      for (std::size_t w = 0; w < words_; ++w) next[w] = uncovered[w] & ~cover_[cand][w];
      chosen.push_back(cand);
      dfs(next, chosen);
      chosen.pop_back();
      if (aborted_) break;
      forbidden_[cand] = true;
      newly_forbidden.push_back(cand);
      if (chosen.size() + 1 >= best_.size()) break;
    }
    for (auto cand : newly_forbidden) forbidden_[cand] = false;
  }

  std::vector<Words> cover_;
  std::vector<std::vector<std::size_t>> coverers_;
  std::size_t points_;
  std::size_t words_;
  std::uint64_t node_budget_;
  double time_budget_;
  std::vector<bool> forbidden_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  std::size_t root_bound_ = 0;
  bool aborted_ = false;
};

// Greedy cover over the filtered pool, ties to the lower candidate index.
std::vector<std::size_t> greedy_incumbent(const std::vector<Words>& cover, std::size_t points) {
  const std::size_t words = (points + 63) / 64;
  Words uncovered(words, ~std::uint64_t{0});
  if (points % 64 != 0) uncovered.back() = (std::uint64_t{1} << (points % 64)) - 1;
  std::vector<std::size_t> chosen;
  std::size_t left = points;
  while (left > 0) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
      const std::size_t g = count_and(cover[c], uncovered);
      if (g > best_gain) {
        best_gain = g;
        best = c;
      }
    }
    chosen.push_back(best);
    for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~cover[best][w];
    left -= best_gain;
  }
  return chosen;
}

}  // namespace

std::string SearchConfig::describe() const {
  if (pool == PoolKind::kFixedR) return "FIXED_R(" + std::to_string(r) + ")";
  return "ALL_EVEN(" + std::to_string(r_min) + "," + (r_max == 0 ? std::string("n") : std::to_string(r_max)) + ")";
}

OptimalResult optimal_sur(const BicoloringFamily& family, const SearchConfig& config) {
  const std::size_t n = family.n;
  if (n == 0 || n > 64) throw Error(ErrorCode::kCapExceeded, "the exact solver needs 1 <= n <= 64");
  family.require_nontrivial();
  if (config.node_budget == 0 || !(config.time_budget_seconds > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "search budgets must be positive");
  }

  // Candidate sizes.
  std::vector<std::size_t> sizes;
  if (config.pool == SearchConfig::PoolKind::kFixedR) {
    if (config.r < 2 || config.r % 2 != 0 || config.r > n) {
      throw Error(ErrorCode::kInvalidArgument, "FIXED_R needs an even r in [2, n]");
    }
    sizes.push_back(config.r);
  } else {
    const std::size_t hi = config.r_max == 0 ? n : config.r_max;
    if (config.r_min < 2 || config.r_min % 2 != 0 || (config.r_max != 0 && hi % 2 != 0) ||
        config.r_min > std::min(hi, n)) {
      throw Error(ErrorCode::kInvalidArgument, "ALL_EVEN needs even 2 <= r_min <= r_max");
    }
    for (std::size_t r = config.r_min; r <= std::min(hi, n); r += 2) sizes.push_back(r);
  }

  // Universe, deduplicated and quotiented by flip when the family allows it.
  const bool quotient = family.is_flip_closed();
  const std::uint64_t all = full_mask(n);
  std::vector<std::uint64_t> points;
  {
    std::set<std::uint64_t> seen;
    for (const auto& b : family.items) {
      std::uint64_t m = b.plus_bits().word0();
      if (quotient) m = std::min(m, ~m & all);
      if (seen.insert(m).second) points.push_back(m);
    }
  }

  OptimalResult result;
  result.flip_quotient = quotient;
  result.points = points.size();
  if (points.empty()) {
    result.family = SurFamily(n, {});
    return result;
  }

  // Pool in lexicographic order, restricted to sets representing something.
  std::vector<std::uint64_t> pool;
  {
    BigInt total = 0;
    for (auto r : sizes) total += binomial(static_cast<long long>(n), static_cast<long long>(r));
    if (total > config.cap) {
      throw Error(ErrorCode::kCapExceeded, "candidate pool exceeds the enumeration cap");
    }
    for (auto r : sizes) {
      auto masks = combination_masks(n, r, config.cap);
      pool.insert(pool.end(), masks.begin(), masks.end());
    }
    std::sort(pool.begin(), pool.end(), mask_less);
  }

  const std::size_t words = (points.size() + 63) / 64;
  std::vector<Words> cover;
  std::vector<std::uint64_t> kept;
  std::vector<std::vector<std::size_t>> coverers(points.size());
  for (auto mask : pool) {
    Words row(words, 0);
    bool any = false;
    const int half = std::popcount(mask) / 2;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (std::popcount(mask & points[p]) == half) {
        row[p / 64] |= std::uint64_t{1} << (p % 64);
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if ((row[p / 64] >> (p % 64)) & 1U) coverers[p].push_back(cover.size());
    }
    cover.push_back(std::move(row));
    kept.push_back(mask);
  }
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (coverers[p].empty()) {
      throw Error(ErrorCode::kInfeasible,
                  "bicoloring " + Bicoloring::from_plus_bits(Bits::from_word(n, points[p])).to_string() +
                      " has no representative in pool " + config.describe());
    }
  }
  result.candidates = kept.size();

  Search search(cover, coverers, points.size(), config);
  search.set_incumbent(greedy_incumbent(cover, points.size()));
  const bool complete = search.run();

  std::vector<std::uint64_t> chosen;
  for (auto c : search.best()) chosen.push_back(kept[c]);
  std::sort(chosen.begin(), chosen.end(), mask_less);
  std::vector<IndexSet> sets;
  for (auto m : chosen) sets.push_back(IndexSet::from_bits(Bits::from_word(n, m)));
  result.family = SurFamily(n, std::move(sets));
  result.size = result.family.size();
  result.nodes = search.nodes();
  if (complete) {
    result.status = SearchStatus::kProvedOptimal;
    result.lower_bound = result.size;
  } else {
    result.status = SearchStatus::kBudgetExhausted;
    result.lower_bound = std::min(search.root_bound(), result.size);
  }
  return result;
}

std::vector<TableCell> gamma_table(std::size_t n_min, std::size_t n_max, const KSpec& k_spec,
                                   const RSpec& r_spec, const SearchConfig& budgets) {
  if (n_min < 2 || n_min > n_max) throw Error(ErrorCode::kInvalidArgument, "table needs 2 <= n_min <= n_max");
  std::vector<TableCell> cells;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    TableCell cell;
    cell.n = n;
    if (k_spec.kind == KSpec::Kind::kFixed) cell.k = k_spec.k;
    if (k_spec.kind == KSpec::Kind::kHalf) cell.k = n / 2;
    if (r_spec.kind == RSpec::Kind::kFixed) cell.r = r_spec.r;
    try {
      BicoloringFamily family = cell.k ? enumerate_k_bicolorings(n, *cell.k, budgets.cap)
                                       : enumerate_nontrivial_bicolorings(n, budgets.cap);
      SearchConfig config = cell.r ? SearchConfig::fixed_r(*cell.r) : SearchConfig::all_even(2, 0);
      config.node_budget = budgets.node_budget;
      config.time_budget_seconds = budgets.time_budget_seconds;
      config.cap = budgets.cap;
      if (cell.k && cell.r) {
        cell.bounds = compute_bounds(static_cast<long long>(n), static_cast<long long>(*cell.k),
                                     static_cast<long long>(*cell.r));
      }
      cell.result = optimal_sur(family, config);
      if (cell.bounds && cell.bounds->feasible() && cell.result->proved_optimal()) {
        const BigInt size = cell.result->size;
        const BigInt upper = BigInt(static_cast<long long>(std::ceil(*cell.bounds->lovasz_stein_upper)));
        cell.within_bounds = *cell.bounds->combined_lower <= size && size <= upper;
      }
    } catch (const Error& e) {
      cell.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace sur
