#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zsschur {

// Fixed-width bit vector used as one row of a reachable-sum table.
// Bit s set means partial sum s is reachable. Shifted ORs and shifted
// intersection tests run in place; bits shifted past the top are dropped,
// which matches the semantics of a bounded sum range.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  void reset(std::size_t bits) {
    bits_ = bits;
    words_.assign((bits + 63) / 64, 0);
  }
  void clear() { std::fill(words_.begin(), words_.end(), std::uint64_t{0}); }

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool test(std::size_t i) const {
    if (i >= bits_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  // this |= (src << shift), truncated to this->size().
  void or_shift_from(const BitRow& src, std::size_t shift) {
    const std::size_t ws = shift >> 6, bs = shift & 63;
    const std::size_t n = words_.size(), sn = src.words_.size();
    for (std::size_t i = n; i-- > ws;) {
      const std::size_t j = i - ws;
      std::uint64_t w = 0;
      if (j < sn) w = src.words_[j] << bs;
      if (bs != 0 && j >= 1 && j - 1 < sn) w |= src.words_[j - 1] >> (64 - bs);
      words_[i] |= w;
    }
    trim();
  }

  // ((src << shift) & *this).any(), without materializing the shift.
  bool intersects_shift(const BitRow& src, std::size_t shift) const {
    const std::size_t ws = shift >> 6, bs = shift & 63;
    const std::size_t n = words_.size(), sn = src.words_.size();
    for (std::size_t i = ws; i < n; ++i) {
      const std::size_t j = i - ws;
      std::uint64_t w = 0;
      if (j < sn) w = src.words_[j] << bs;
      if (bs != 0 && j >= 1 && j - 1 < sn) w |= src.words_[j - 1] >> (64 - bs);
      if (w & words_[i]) return true;
    }
    return false;
  }

  void or_with(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
      words_[i] |= o.words_[i];
    trim();
  }

 private:
  void trim() {
    // Mask out bits beyond size() so any()/intersections stay exact.
    if (bits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zsschur
