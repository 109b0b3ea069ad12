#include "sur/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sur/error.hpp"

namespace sur {

namespace {

IndexSet range_set(std::size_t n, std::size_t first, std::size_t last) {
  std::vector<int> members;
  for (std::size_t i = first; i <= last; ++i) members.push_back(static_cast<int>(i));
  return IndexSet::from_members(n, std::move(members));
}

}  // namespace

SurFamily star(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "star needs n >= 2");
  std::vector<IndexSet> sets;
  for (std::size_t j = 2; j <= n; ++j) sets.push_back(IndexSet::from_members(n, {1, static_cast<int>(j)}));
  return SurFamily(n, std::move(sets));
}

SurFamily dyadic(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "dyadic construction needs n to be a power of two >= 2, got " + std::to_string(n));
  }
  std::vector<IndexSet> sets;
  for (std::size_t block = 2; block <= n; block *= 2) {
    for (std::size_t start = 1; start <= n; start += block) {
      sets.push_back(range_set(n, start, start + block - 1));
    }
  }
  return SurFamily(n, std::move(sets));
}

SurFamily sliding_window(std::size_t n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "sliding window needs n >= 4 with n/2 even, got " + std::to_string(n));
  }
  const std::size_t half = n / 2;
  std::vector<IndexSet> sets;
  for (std::size_t i = 1; i <= half; ++i) sets.push_back(range_set(n, i, i + half - 1));
  return SurFamily(n, std::move(sets));
}

bool WindowProfile::all_even() const {
  return std::all_of(values.begin(), values.end(), [](long long c) { return c % 2 == 0; });
}

bool WindowProfile::steps_bounded() const {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const long long step = values[i] > values[i + 1] ? values[i] - values[i + 1] : values[i + 1] - values[i];
    if (step != 0 && step != 2) return false;
  }
  return true;
}

bool WindowProfile::endpoints_opposite() const {
  return !values.empty() && values.front() * values.back() <= 0;
}

bool WindowProfile::has_zero() const {
  return std::find(values.begin(), values.end(), 0) != values.end();
}

WindowProfile window_profile(std::size_t n, const Bicoloring& b) {
  if (b.n() != n) throw Error(ErrorCode::kDimensionMismatch, "bicoloring length differs from n");
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "window profile needs n >= 4 with n/2 even");
  }
  if (b.plus_count() != n / 2) {
    throw Error(ErrorCode::kInvalidArgument, "window profile needs a balanced bicoloring, got " +
                                                 std::to_string(b.plus_count()) + " of " +
                                                 std::to_string(n) + " colored +1");
  }
  const std::size_t half = n / 2;
  WindowProfile p;
  long long c = 0;
  for (std::size_t i = 1; i <= half; ++i) c += b.color(i);
  p.values.push_back(c);
  // Slide: drop element i, add element i + half.
  for (std::size_t i = 1; i < half; ++i) {
    c += b.color(i + half) - b.color(i);
    p.values.push_back(c);
  }
  return p;
}

SurFamily singleton_edge_cover(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "edge cover needs n >= 2");
  std::vector<IndexSet> sets;
  for (std::size_t i = 1; i + 1 <= n; i += 2) {
    sets.push_back(IndexSet::from_members(n, {static_cast<int>(i), static_cast<int>(i + 1)}));
  }
  if (n % 2 == 1) {
    sets.push_back(IndexSet::from_members(n, {static_cast<int>(n - 1), static_cast<int>(n)}));
  }
  return SurFamily(n, std::move(sets));
}

SurFamily recursive_lift(const SurFamily& base, std::size_t n, std::size_t r) {
  if (r % 2 != 0 || r < 4) {
    throw Error(ErrorCode::kInvalidArgument, "lift needs an even r >= 4, got " + std::to_string(r));
  }
  if (r > n) throw Error(ErrorCode::kInvalidArgument, "lift needs r <= n");
  if (base.n != n) throw Error(ErrorCode::kDimensionMismatch, "base family is over a different n");

  std::vector<IndexSet> out;
  std::set<std::vector<int>> seen;
  for (const auto& a : base.sets) {
    if (a.size() != r - 2) {
      throw Error(ErrorCode::kInvalidArgument, "base set {" + a.to_string() + "} has size " +
                                                   std::to_string(a.size()) + ", expected " +
                                                   std::to_string(r - 2));
    }
    std::vector<int> outside;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!a.contains(static_cast<int>(i))) outside.push_back(static_cast<int>(i));
    }
    for (std::size_t j = 1; j < outside.size(); ++j) {
      std::vector<int> members = a.members();
      members.push_back(outside[0]);
      members.push_back(outside[j]);
      auto lifted = IndexSet::from_members(n, std::move(members));
      if (seen.insert(lifted.members()).second) out.push_back(std::move(lifted));
    }
  }
  return SurFamily(n, std::move(out));
}

}  // namespace sur
