#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace surmise {

/// Fixed-universe dynamic bitset. Used both for target subsets (knowledge
/// states) and model subsets (table columns).
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  static BitSet full(std::size_t universe) {
    BitSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return size_; }

  bool contains(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void insert(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void set(std::size_t i, bool value) noexcept { value ? insert(i) : erase(i); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept { return count() == 0; }

  /// |this ∩ other|, |this \ other| without materializing either set.
  std::size_t count_and(const BitSet& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      n += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return n;
  }
  std::size_t count_and_not(const BitSet& other) const noexcept {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      n += static_cast<std::size_t>(std::popcount(words_[w] & ~other.words_[w]));
    return n;
  }

  bool is_subset_of(const BitSet& other) const noexcept { return count_and_not(other) == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend auto operator<=>(const BitSet& a, const BitSet& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace surmise
