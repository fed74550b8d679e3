#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gensub {

/// Dense square boolean matrix, one packed row per element.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n_ * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
  }
  void reset(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / kWordBits] &= ~(Word{1} << (j % kWordBits));
  }

  std::span<Word> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }
  std::span<const Word> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t count() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

}  // namespace gensub
