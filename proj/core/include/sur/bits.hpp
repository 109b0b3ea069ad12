#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sur {

// Fixed-length bit vector over 0-based positions. One machine word covers
// n <= 64, which is the fast path used by the solvers.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size);

  static Bits from_word(std::size_t size, std::uint64_t word);

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // Low word; only meaningful as the whole value when size() <= 64.
  std::uint64_t word0() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool test(std::size_t pos) const noexcept {
    return (words_[pos >> 6] >> (pos & 63)) & 1U;
  }
  void set(std::size_t pos, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
    if (value) {
      words_[pos >> 6] |= bit;
    } else {
      words_[pos >> 6] &= ~bit;
    }
  }

  std::size_t count() const noexcept;
  std::size_t count_and(const Bits& other) const noexcept;
  bool any() const noexcept;
  bool intersects(const Bits& other) const noexcept;

  // Bitwise complement restricted to [0, size).
  Bits complement() const;

  // 0-based positions of set bits in increasing order.
  std::vector<std::size_t> positions() const;

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sur
