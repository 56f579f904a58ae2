#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace surmise {

/// Square boolean matrix; the representation of every binary relation here.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static BoolMatrix identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) noexcept { bits_[i * n_ + j] = v ? 1 : 0; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto b : bits_) c += b;
    return c;
  }

  /// Pointwise this ⊆ other.
  bool is_subset_of(const BoolMatrix& other) const noexcept {
    if (n_ != other.n_) return false;
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] && !other.bits_[k]) return false;
    return true;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace surmise
