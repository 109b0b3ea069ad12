#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sur/bits.hpp"

namespace sur {

// A map [n] -> {-1, +1}, stored as the set of +1 positions.
class Bicoloring {
 public:
  // colors[i] must be -1 or +1.
  static Bicoloring from_colors(const std::vector<int>& colors);
  // Text form over {+,-}, e.g. "++--".
  static Bicoloring parse(std::string_view text);
  // 1-based indices colored +1; everything else is -1.
  static Bicoloring from_plus_set(std::size_t n, const std::vector<int>& plus);
  static Bicoloring from_plus_bits(Bits plus);

  std::size_t n() const noexcept { return plus_.size(); }
  // Color of 1-based element i.
  int color(std::size_t i) const noexcept { return plus_.test(i - 1) ? 1 : -1; }
  std::size_t plus_count() const noexcept { return plus_.count(); }
  std::size_t minus_count() const noexcept { return n() - plus_count(); }
  // |B(+1)| - |B(-1)|
  long long imbalance() const noexcept {
    return static_cast<long long>(plus_count()) - static_cast<long long>(minus_count());
  }
  bool is_trivial() const noexcept {
    return plus_count() == 0 || plus_count() == n();
  }

  const Bits& plus_bits() const noexcept { return plus_; }
  std::vector<int> plus_members() const;
  std::vector<int> colors() const;
  Bicoloring flipped() const;
  std::string to_string() const;

  friend bool operator==(const Bicoloring&, const Bicoloring&) = default;

 private:
  explicit Bicoloring(Bits plus) : plus_(std::move(plus)) {}
  Bits plus_;
};

// A subset of [n] given by its 1-based members.
class IndexSet {
 public:
  // Members must lie in [1, n] and be distinct; order is irrelevant.
  static IndexSet from_members(std::size_t n, std::vector<int> members);
  static IndexSet from_bits(Bits bits);
  // Comma separated 1-based members, e.g. "1,3,4".
  static IndexSet parse(std::size_t n, std::string_view text);

  std::size_t n() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) <= n() && bits_.test(static_cast<std::size_t>(i) - 1);
  }
  const std::vector<int>& members() const noexcept { return members_; }
  const Bits& bits() const noexcept { return bits_; }
  std::string to_string() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }
  // Lexicographic order of the sorted member lists.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return a.members_ < b.members_;
  }

 private:
  IndexSet(Bits bits, std::vector<int> members)
      : bits_(std::move(bits)), members_(std::move(members)) {}
  Bits bits_;
  std::vector<int> members_;
};

struct BicoloringFamily {
  std::size_t n = 0;
  std::vector<Bicoloring> items;

  BicoloringFamily() = default;
  BicoloringFamily(std::size_t n, std::vector<Bicoloring> items);

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
  // Throws kTrivialBicoloring naming the first offender.
  void require_nontrivial() const;
  // Closed under flip(B).
  bool is_flip_closed() const;
};

// An ordered family of subsets proposed as a system of unbiased
// representatives. The constructor only checks that sets are non-empty
// subsets of [n]; randomized constructions may legitimately emit odd or
// repeated sets, so the stricter shape is a separate check.
struct SurFamily {
  std::size_t n = 0;
  std::vector<IndexSet> sets;

  SurFamily() = default;
  SurFamily(std::size_t n, std::vector<IndexSet> sets);

  std::size_t size() const noexcept { return sets.size(); }
  // Every set even-sized and no duplicates.
  bool has_exact_shape() const;
  void require_exact_shape() const;
};

struct Witness {
  std::size_t set_index = 0;
  long long value = 0;
};

struct Certificate {
  // One entry per bicoloring; nullopt means uncovered.
  std::vector<std::optional<Witness>> entries;
  long long delta = 0;

  std::size_t covered_count() const noexcept;
  std::size_t uncovered_count() const noexcept { return entries.size() - covered_count(); }
  bool all_covered() const noexcept { return covered_count() == entries.size(); }
  std::optional<std::size_t> first_uncovered() const noexcept;
};

}  // namespace sur
