#include "sur/bits.hpp"

#include <bit>

namespace sur {

namespace {
std::uint64_t tail_mask(std::size_t size) {
  const std::size_t rem = size & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}
}  // namespace

Bits::Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

Bits Bits::from_word(std::size_t size, std::uint64_t word) {
  Bits b(size);
  if (!b.words_.empty()) b.words_[0] = size >= 64 ? word : word & tail_mask(size);
  return b;
}

std::size_t Bits::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bits::count_and(const Bits& other) const noexcept {
  std::size_t c = 0;
  const std::size_t m = words_.size() < other.words_.size() ? words_.size() : other.words_.size();
  for (std::size_t i = 0; i < m; ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

bool Bits::any() const noexcept {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool Bits::intersects(const Bits& other) const noexcept {
  const std::size_t m = words_.size() < other.words_.size() ? words_.size() : other.words_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Bits Bits::complement() const {
  Bits out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (!out.words_.empty()) out.words_.back() &= tail_mask(size_);
  return out;
}

std::vector<std::size_t> Bits::positions() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

}  // namespace sur
